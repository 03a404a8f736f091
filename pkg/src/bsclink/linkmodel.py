"""Free-space link model for backscatter configurations.

A carrier at power P_C travels source -> device -> receiver. Each hop is
ideal line-of-sight Friis propagation, the device re-radiates a fraction mu
of the power arriving at its antenna output, and the receiver sees

    P_RX = G_RX * G_C * G_device^2 * (c0 / (4 pi f_c))^4 * mu * P_C / (R_RX^2 * R_C^2)

in the bi-static case. The mono-static case (shared source/receiver antenna,
R = R_C = R_RX, G = G_C = G_RX) is the same expression and is evaluated
through the same code path, so the two agree bit-for-bit when the bi-static
distances and gains coincide.

The model is pure far-field: no fading, shadowing, multipath, polarization
mismatch, or near-field coupling. Results below roughly one wavelength of
distance are non-physical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .units import (
    Decibel,
    DistanceMeters,
    Efficiency,
    FrequencyHz,
    GainDbi,
    BandwidthHz,
    PowerDbm,
    PowerWatts,
    TemperatureKelvin,
    SPEED_OF_LIGHT,
    coerce,
    dbm_from_watts,
    linear_from_db,
)


class GeometryError(ValueError):
    """Scenario geometry does not match the requested operation."""


@dataclass(frozen=True)
class CarrierSource:
    """Dedicated carrier transmitter: power and antenna gain."""

    power_w: PowerWatts
    gain: GainDbi

    def __post_init__(self) -> None:
        object.__setattr__(self, "power_w", coerce(PowerWatts, self.power_w, "power_w"))
        object.__setattr__(self, "gain", coerce(GainDbi, self.gain, "gain"))


@dataclass(frozen=True)
class BackscatterDevice:
    """Passive reflector: antenna gain and backscatter efficiency mu."""

    gain: GainDbi
    efficiency: Efficiency = Efficiency(1.0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gain", coerce(GainDbi, self.gain, "gain"))
        object.__setattr__(
            self, "efficiency", coerce(Efficiency, self.efficiency, "efficiency")
        )


@dataclass(frozen=True)
class Receiver:
    """Receive antenna gain plus the receiver noise figure."""

    gain: GainDbi
    noise_figure: Decibel = Decibel(0.0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gain", coerce(GainDbi, self.gain, "gain"))
        object.__setattr__(
            self, "noise_figure", coerce(Decibel, self.noise_figure, "noise_figure")
        )
        if float(self.noise_figure) < 0.0:
            raise ValueError("noise figure must be >= 0 dB")


@dataclass(frozen=True)
class Monostatic:
    """Source and receiver share one antenna at distance r from the device."""

    r: DistanceMeters

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", coerce(DistanceMeters, self.r, "r"))


@dataclass(frozen=True)
class Bistatic:
    """Separate source (at r_c) and receiver (at r_rx) antennas."""

    r_c: DistanceMeters
    r_rx: DistanceMeters

    def __post_init__(self) -> None:
        object.__setattr__(self, "r_c", coerce(DistanceMeters, self.r_c, "r_c"))
        object.__setattr__(self, "r_rx", coerce(DistanceMeters, self.r_rx, "r_rx"))


Geometry = Monostatic | Bistatic


@dataclass(frozen=True)
class Scenario:
    """One complete backscatter link description.

    ``bandwidth=None`` means the unlimited-bandwidth idealization. A
    mono-static geometry implies a shared antenna, so declaring it with
    unequal source/receiver gains is rejected.
    """

    source: CarrierSource
    device: BackscatterDevice
    receiver: Receiver
    geometry: Geometry
    carrier_frequency: FrequencyHz
    bandwidth: BandwidthHz | None = None
    temperature: TemperatureKelvin = TemperatureKelvin(300.0)

    def __post_init__(self) -> None:
        if not isinstance(self.geometry, (Monostatic, Bistatic)):
            raise TypeError("geometry must be Monostatic or Bistatic")
        object.__setattr__(
            self,
            "carrier_frequency",
            coerce(FrequencyHz, self.carrier_frequency, "carrier_frequency"),
        )
        if self.bandwidth is not None:
            object.__setattr__(
                self, "bandwidth", coerce(BandwidthHz, self.bandwidth, "bandwidth")
            )
        object.__setattr__(
            self, "temperature", coerce(TemperatureKelvin, self.temperature, "temperature")
        )
        if isinstance(self.geometry, Monostatic) and float(self.source.gain) != float(
            self.receiver.gain
        ):
            raise ValueError(
                "mono-static geometry shares one antenna: source gain "
                f"{float(self.source.gain)} dBi != receiver gain "
                f"{float(self.receiver.gain)} dBi"
            )

    @classmethod
    def monostatic(
        cls,
        *,
        r_m: float,
        power_dbm: float = 28.0,
        gain_dbi: float = 8.0,
        device_gain_dbi: float = 2.15,
        efficiency: float = 1.0,
        noise_figure_db: float = 0.0,
        frequency_hz: float = 900e6,
        bandwidth_hz: float | None = None,
        temperature_k: float = 300.0,
    ) -> "Scenario":
        """Build a mono-static scenario from plain numbers.

        Defaults describe the reference dedicated-carrier setup used by the
        figure presets: 28 dBm carrier, 8 dBi shared antenna, half-wave
        dipole device (2.15 dBi), perfect reflection, ideal receiver,
        900 MHz.
        """
        from .units import watts_from_dbm

        return cls(
            source=CarrierSource(watts_from_dbm(power_dbm), GainDbi(gain_dbi)),
            device=BackscatterDevice(GainDbi(device_gain_dbi), Efficiency(efficiency)),
            receiver=Receiver(GainDbi(gain_dbi), Decibel(noise_figure_db)),
            geometry=Monostatic(DistanceMeters(r_m)),
            carrier_frequency=FrequencyHz(frequency_hz),
            bandwidth=None if bandwidth_hz is None else BandwidthHz(bandwidth_hz),
            temperature=TemperatureKelvin(temperature_k),
        )

    @classmethod
    def bistatic(
        cls,
        *,
        r_c_m: float,
        r_rx_m: float,
        power_dbm: float = 28.0,
        source_gain_dbi: float = 8.0,
        receiver_gain_dbi: float = 8.0,
        device_gain_dbi: float = 2.15,
        efficiency: float = 1.0,
        noise_figure_db: float = 0.0,
        frequency_hz: float = 900e6,
        bandwidth_hz: float | None = None,
        temperature_k: float = 300.0,
    ) -> "Scenario":
        from .units import watts_from_dbm

        return cls(
            source=CarrierSource(watts_from_dbm(power_dbm), GainDbi(source_gain_dbi)),
            device=BackscatterDevice(GainDbi(device_gain_dbi), Efficiency(efficiency)),
            receiver=Receiver(GainDbi(receiver_gain_dbi), Decibel(noise_figure_db)),
            geometry=Bistatic(DistanceMeters(r_c_m), DistanceMeters(r_rx_m)),
            carrier_frequency=FrequencyHz(frequency_hz),
            bandwidth=None if bandwidth_hz is None else BandwidthHz(bandwidth_hz),
            temperature=TemperatureKelvin(temperature_k),
        )


@dataclass(frozen=True)
class LinkBudget:
    """Itemized dB ledger from carrier power down to received power.

    The first entry is the carrier power in dBm; every further entry is a
    dB contribution. Their sum reconciles with ``received_power_dbm``.
    """

    entries: tuple[tuple[str, Decibel], ...]
    received_power: PowerWatts
    received_power_dbm: PowerDbm
    total_dbm: PowerDbm = field(init=False)

    def __post_init__(self) -> None:
        total = sum(float(v) for _, v in self.entries)
        object.__setattr__(self, "total_dbm", PowerDbm(total))


def fspl_db(r: DistanceMeters | float, f: FrequencyHz | float) -> float:
    """One-hop free-space path loss 20*log10(4 pi R f / c0) in dB."""
    return 20.0 * math.log10(4.0 * math.pi * float(r) * float(f) / SPEED_OF_LIGHT)


def _one_hop_gain(r: float, f: float) -> float:
    # linear power gain (c0 / (4 pi R f))^2 of a single Friis hop
    amp = SPEED_OF_LIGHT / (4.0 * math.pi * r * f)
    return amp * amp


def _two_hop_power(
    p_c: float,
    g_c_dbi: float,
    g_rx_dbi: float,
    g_device_dbi: float,
    mu: float,
    f: float,
    r_c: float,
    r_rx: float,
) -> float:
    # Shared computation path for both configurations; the mono-static case
    # calls this with r_c == r_rx and g_c == g_rx, making the reduction exact.
    g_c = linear_from_db(g_c_dbi)
    g_rx = linear_from_db(g_rx_dbi)
    g_dev = linear_from_db(g_device_dbi)
    return (
        g_rx
        * g_c
        * g_dev
        * g_dev
        * _one_hop_gain(r_c, f)
        * _one_hop_gain(r_rx, f)
        * mu
        * p_c
    )


def device_received_power(
    source: CarrierSource,
    device: BackscatterDevice,
    r_c: DistanceMeters | float,
    f: FrequencyHz | float,
) -> PowerWatts:
    """Power at the antenna output of the passive device (first hop only).

    P = G_C * G_device * (c0 / (4 pi R_C f_c))^2 * P_C. The backscatter
    efficiency does not apply here; it acts on re-radiation.
    """
    r_c = coerce(DistanceMeters, r_c, "r_c")
    f = coerce(FrequencyHz, f, "f")
    p = (
        linear_from_db(float(source.gain))
        * linear_from_db(float(device.gain))
        * _one_hop_gain(float(r_c), float(f))
        * float(source.power_w)
    )
    return PowerWatts(p)


def bistatic_received_power(s: Scenario) -> PowerWatts:
    """Receiver power for a bi-static scenario (two distinct hops)."""
    if not isinstance(s.geometry, Bistatic):
        raise GeometryError("scenario geometry is not bi-static")
    return PowerWatts(
        _two_hop_power(
            float(s.source.power_w),
            float(s.source.gain),
            float(s.receiver.gain),
            float(s.device.gain),
            float(s.device.efficiency),
            float(s.carrier_frequency),
            float(s.geometry.r_c),
            float(s.geometry.r_rx),
        )
    )


def monostatic_received_power(s: Scenario) -> PowerWatts:
    """Receiver power for a mono-static scenario (both hops span R)."""
    if not isinstance(s.geometry, Monostatic):
        raise GeometryError("scenario geometry is not mono-static")
    r = float(s.geometry.r)
    return PowerWatts(
        _two_hop_power(
            float(s.source.power_w),
            float(s.source.gain),
            float(s.receiver.gain),
            float(s.device.gain),
            float(s.device.efficiency),
            float(s.carrier_frequency),
            r,
            r,
        )
    )


def received_power(s: Scenario) -> PowerWatts:
    """Receiver power for either geometry."""
    if isinstance(s.geometry, Monostatic):
        return monostatic_received_power(s)
    return bistatic_received_power(s)


def link_budget(s: Scenario) -> LinkBudget:
    """Itemize the received-power computation as an auditable dB ledger."""
    if isinstance(s.geometry, Monostatic):
        r_c = r_rx = float(s.geometry.r)
    else:
        r_c = float(s.geometry.r_c)
        r_rx = float(s.geometry.r_rx)
    f = float(s.carrier_frequency)
    mu_db = 10.0 * math.log10(float(s.device.efficiency))
    entries = (
        ("carrier power", Decibel(float(dbm_from_watts(s.source.power_w)))),
        ("carrier antenna gain", Decibel(float(s.source.gain))),
        ("device antenna gain (forward hop)", Decibel(float(s.device.gain))),
        ("path loss (forward hop)", Decibel(-fspl_db(r_c, f))),
        ("backscatter efficiency", Decibel(mu_db)),
        ("device antenna gain (return hop)", Decibel(float(s.device.gain))),
        ("receiver antenna gain", Decibel(float(s.receiver.gain))),
        ("path loss (return hop)", Decibel(-fspl_db(r_rx, f))),
    )
    p_rx = received_power(s)
    return LinkBudget(
        entries=entries,
        received_power=p_rx,
        received_power_dbm=dbm_from_watts(p_rx),
    )
