"""Scenario config files: flat key-value text with dotted section keys.

Example (dedicated carrier):

    schema = 1
    topology = monostatic
    carrier.power = 28 dBm
    carrier.gain = 8 dBi
    device.gain = 2.15 dBi
    device.efficiency = 0.25
    receiver.gain = 8 dBi
    receiver.noise_figure = 20 dB
    geometry.r = 10 m
    frequency = 915 MHz
    bandwidth = 26 MHz
    profile = FCC_915

    sweep.parameter = R
    sweep.start = 1 m
    sweep.stop = 1000 m
    sweep.points = 61
    sweep.spacing = log

Ambient topology replaces the carrier block with exactly one of
``ambient.field_strength`` / ``ambient.device_power`` and uses
``geometry.r_rx``. ``bandwidth = inf`` selects the unlimited-bandwidth
idealization. Power values must carry an explicit unit (dBm, W, mW);
bare numbers are rejected because both notations are common.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .linkmodel import (
    BackscatterDevice,
    Bistatic,
    CarrierSource,
    Monostatic,
    Receiver,
    Scenario,
)
from .ambient import AmbientScenario
from .regulatory import BandProfile, profile_by_id
from .units import (
    BandwidthHz,
    Decibel,
    DistanceMeters,
    Efficiency,
    FieldStrengthDbuV,
    FrequencyHz,
    GainDbi,
    PowerWatts,
    TemperatureKelvin,
    watts_from_dbm,
)


class ConfigError(ValueError):
    """Malformed or inconsistent scenario config."""


SWEEP_PARAMETERS = ("R", "R_C", "R_RX", "P_C", "f_c", "W", "G", "SNR", "E_field")


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter over [start, stop] in linear terms.

    ``start``/``stop`` are stored in linear SI units (meters, watts, Hz,
    plain ratio for SNR and gain, V/m for field strength) so log spacing is
    well defined; dB-domain inputs like ``-20 dB`` are converted on parse.
    """

    parameter: str
    start: float
    stop: float
    points: int
    spacing: str = "log"

    def values(self) -> list[float]:
        if self.spacing == "log":
            lo, hi = math.log10(self.start), math.log10(self.stop)
            step = (hi - lo) / (self.points - 1)
            return [10.0 ** (lo + i * step) for i in range(self.points)]
        step = (self.stop - self.start) / (self.points - 1)
        return [self.start + i * step for i in range(self.points)]


@dataclass(frozen=True)
class ScenarioConfig:
    """Parsed config: one scenario (dedicated or ambient) plus options."""

    scenario: Scenario | AmbientScenario
    profile: BandProfile | None = None
    sweep: SweepSpec | None = None


def _strip_comment(line: str) -> str:
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def _split_number_unit(text: str, what: str) -> tuple[float, str]:
    parts = text.split()
    if len(parts) not in (1, 2):
        raise ConfigError(f"{what}: cannot parse value {text!r}")
    try:
        number = float(parts[0])
    except ValueError:
        raise ConfigError(f"{what}: not a number: {parts[0]!r}") from None
    unit = parts[1] if len(parts) == 2 else ""
    return number, unit


def parse_power_w(text: str, what: str) -> float:
    """Power in watts from '28 dBm', '0.63 W', or '500 mW'. Unit required."""
    number, unit = _split_number_unit(text, what)
    if unit == "dBm":
        return float(watts_from_dbm(number))
    if unit == "W":
        return number
    if unit == "mW":
        return number * 1e-3
    if unit == "":
        raise ConfigError(f"{what}: bare power {text!r} is ambiguous; write dBm, W, or mW")
    raise ConfigError(f"{what}: unknown power unit {unit!r}")


_FREQ_UNITS = {"": 1.0, "Hz": 1.0, "kHz": 1e3, "MHz": 1e6, "GHz": 1e9}
_DIST_UNITS = {"": 1.0, "m": 1.0, "cm": 1e-2, "km": 1e3}
_TIME_UNITS = {"": 1.0, "s": 1.0, "ms": 1e-3, "us": 1e-6}


def parse_frequency_hz(text: str, what: str) -> float:
    number, unit = _split_number_unit(text, what)
    if unit not in _FREQ_UNITS:
        raise ConfigError(f"{what}: unknown frequency unit {unit!r}")
    return number * _FREQ_UNITS[unit]


def parse_bandwidth_hz(text: str, what: str) -> float | None:
    if text.strip() == "inf":
        return None
    return parse_frequency_hz(text, what)


def parse_distance_m(text: str, what: str) -> float:
    number, unit = _split_number_unit(text, what)
    if unit not in _DIST_UNITS:
        raise ConfigError(f"{what}: unknown distance unit {unit!r}")
    return number * _DIST_UNITS[unit]


def parse_gain_dbi(text: str, what: str) -> float:
    number, unit = _split_number_unit(text, what)
    if unit not in ("", "dBi"):
        raise ConfigError(f"{what}: unknown gain unit {unit!r}")
    return number


def parse_db(text: str, what: str) -> float:
    number, unit = _split_number_unit(text, what)
    if unit not in ("", "dB"):
        raise ConfigError(f"{what}: unknown unit {unit!r}, expected dB")
    return number


def parse_field_dbuv(text: str, what: str) -> float:
    number, unit = _split_number_unit(text, what)
    if unit not in ("", "dBuV/m"):
        raise ConfigError(f"{what}: unknown field-strength unit {unit!r}")
    return number


def parse_ratio(text: str, what: str) -> float:
    number, unit = _split_number_unit(text, what)
    if unit != "":
        raise ConfigError(f"{what}: expected a bare number, got unit {unit!r}")
    return number


def parse_kelvin(text: str, what: str) -> float:
    number, unit = _split_number_unit(text, what)
    if unit not in ("", "K"):
        raise ConfigError(f"{what}: unknown temperature unit {unit!r}")
    return number


def _parse_lines(text: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ConfigError(f"line {lineno}: empty key or value in {raw!r}")
        if key in pairs:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = value
    return pairs


# Sweep bounds are given in the parameter's natural notation and stored in
# linear terms; for the dB-domain parameters (P_C, SNR, G, E_field) the
# linear value is what must be positive, so '-20 dB' is a valid SNR bound.
def _parse_sweep_bound(parameter: str, text: str, what: str) -> float:
    if parameter in ("R", "R_C", "R_RX"):
        return parse_distance_m(text, what)
    if parameter == "P_C":
        return parse_power_w(text, what)
    if parameter in ("f_c", "W"):
        return parse_frequency_hz(text, what)
    if parameter == "G":
        return 10.0 ** (parse_gain_dbi(text, what) / 10.0)
    if parameter == "SNR":
        return 10.0 ** (parse_db(text, what) / 10.0)
    if parameter == "E_field":
        return 10.0 ** (parse_field_dbuv(text, what) / 20.0) * 1e-6  # V/m
    raise ConfigError(f"unknown sweep parameter {parameter!r}")


def _parse_sweep(pairs: dict[str, str], topology: str) -> SweepSpec | None:
    keys = [k for k in pairs if k.startswith("sweep.")]
    if not keys:
        return None
    try:
        parameter = pairs.pop("sweep.parameter")
    except KeyError:
        raise ConfigError("sweep block present but sweep.parameter missing") from None
    if parameter not in SWEEP_PARAMETERS:
        raise ConfigError(
            f"sweep.parameter must be one of {', '.join(SWEEP_PARAMETERS)}; got {parameter!r}"
        )
    if topology == "ambient" and parameter not in ("R_RX", "W", "E_field", "SNR"):
        raise ConfigError(f"sweep parameter {parameter!r} does not apply to ambient topology")
    if topology == "monostatic" and parameter in ("R_C", "R_RX", "E_field"):
        raise ConfigError(f"sweep parameter {parameter!r} does not apply to monostatic topology")
    if topology == "bistatic" and parameter in ("R", "E_field"):
        raise ConfigError(f"sweep parameter {parameter!r} does not apply to bistatic topology")

    for needed in ("sweep.start", "sweep.stop", "sweep.points"):
        if needed not in pairs:
            raise ConfigError(f"sweep block missing {needed}")
    start = _parse_sweep_bound(parameter, pairs.pop("sweep.start"), "sweep.start")
    stop = _parse_sweep_bound(parameter, pairs.pop("sweep.stop"), "sweep.stop")
    try:
        points = int(pairs.pop("sweep.points"))
    except ValueError:
        raise ConfigError("sweep.points must be an integer") from None
    spacing = pairs.pop("sweep.spacing", "log")
    if spacing not in ("log", "linear"):
        raise ConfigError(f"sweep.spacing must be 'log' or 'linear', got {spacing!r}")
    if not (start > 0.0 and stop > 0.0):
        raise ConfigError("sweep bounds must be positive (in linear terms)")
    if not start < stop:
        raise ConfigError("sweep.start must be less than sweep.stop")
    if points < 2:
        raise ConfigError("sweep.points must be at least 2")
    return SweepSpec(parameter=parameter, start=start, stop=stop, points=points, spacing=spacing)


def parse_config(text: str) -> ScenarioConfig:
    """Parse config text into a validated ScenarioConfig."""
    pairs = _parse_lines(text)

    schema = pairs.pop("schema", None)
    if schema is None:
        raise ConfigError("missing required key: schema = 1")
    if schema != "1":
        raise ConfigError(f"unsupported schema {schema!r}; this build reads schema = 1")

    try:
        topology = pairs.pop("topology")
    except KeyError:
        raise ConfigError("missing required key: topology") from None
    if topology not in ("monostatic", "bistatic", "ambient"):
        raise ConfigError(f"topology must be monostatic, bistatic, or ambient; got {topology!r}")

    sweep = _parse_sweep(pairs, topology)

    profile = None
    if "profile" in pairs:
        try:
            profile = profile_by_id(pairs.pop("profile"))
        except KeyError as exc:
            raise ConfigError(str(exc.args[0])) from None

    def take(key: str) -> str:
        try:
            return pairs.pop(key)
        except KeyError:
            raise ConfigError(f"missing required key: {key}") from None

    try:
        device = BackscatterDevice(
            gain=GainDbi(parse_gain_dbi(take("device.gain"), "device.gain")),
            efficiency=Efficiency(
                parse_ratio(pairs.pop("device.efficiency", "1.0"), "device.efficiency")
            ),
        )
        receiver = Receiver(
            gain=GainDbi(parse_gain_dbi(take("receiver.gain"), "receiver.gain")),
            noise_figure=Decibel(
                parse_db(pairs.pop("receiver.noise_figure", "0"), "receiver.noise_figure")
            ),
        )
        frequency = FrequencyHz(parse_frequency_hz(take("frequency"), "frequency"))
        bandwidth_hz = parse_bandwidth_hz(take("bandwidth"), "bandwidth")
        bandwidth = None if bandwidth_hz is None else BandwidthHz(bandwidth_hz)

        if topology == "ambient":
            field = pairs.pop("ambient.field_strength", None)
            dev_power = pairs.pop("ambient.device_power", None)
            if (field is None) == (dev_power is None):
                raise ConfigError(
                    "ambient topology needs exactly one of "
                    "ambient.field_strength / ambient.device_power"
                )
            scenario: Scenario | AmbientScenario = AmbientScenario(
                device=device,
                receiver=receiver,
                r_rx=DistanceMeters(parse_distance_m(take("geometry.r_rx"), "geometry.r_rx")),
                carrier_frequency=frequency,
                bandwidth=bandwidth,
                field_strength=None
                if field is None
                else FieldStrengthDbuV(parse_field_dbuv(field, "ambient.field_strength")),
                device_input_power=None
                if dev_power is None
                else PowerWatts(parse_power_w(dev_power, "ambient.device_power")),
            )
        else:
            source = CarrierSource(
                power_w=PowerWatts(parse_power_w(take("carrier.power"), "carrier.power")),
                gain=GainDbi(parse_gain_dbi(take("carrier.gain"), "carrier.gain")),
            )
            if topology == "monostatic":
                geometry: Monostatic | Bistatic = Monostatic(
                    r=DistanceMeters(parse_distance_m(take("geometry.r"), "geometry.r"))
                )
            else:
                geometry = Bistatic(
                    r_c=DistanceMeters(parse_distance_m(take("geometry.r_c"), "geometry.r_c")),
                    r_rx=DistanceMeters(parse_distance_m(take("geometry.r_rx"), "geometry.r_rx")),
                )
            scenario = Scenario(
                source=source,
                device=device,
                receiver=receiver,
                geometry=geometry,
                carrier_frequency=frequency,
                bandwidth=bandwidth,
                temperature=TemperatureKelvin(
                    parse_kelvin(pairs.pop("temperature", "300"), "temperature")
                ),
            )
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from None

    if pairs:
        unknown = ", ".join(sorted(pairs))
        raise ConfigError(f"unknown config keys: {unknown}")

    return ScenarioConfig(scenario=scenario, profile=profile, sweep=sweep)


def load_config(path: str) -> ScenarioConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc.strerror}") from None
    return parse_config(text)
