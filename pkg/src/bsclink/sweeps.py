"""Parameter sweeps rendered as deterministic CSV tables.

Numbers are formatted with 9 significant digits ('%.9g'), '.' decimal
separator, ',' field separator, and '\\n' line endings, so the same build
always produces byte-identical output for the same input. Fields that do
not apply (e.g. SNR with unlimited bandwidth) are left empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .ambient import AmbientScenario, ambient_capacity, ambient_received_power
from .capacity import (
    CapacityResult,
    NoiseModel,
    absolute_bound,
    bandwidth_limited_bound,
    capacity,
    Regime,
    with_carrier_power,
)
from .config import ScenarioConfig, SweepSpec
from .linkmodel import (
    Bistatic,
    CarrierSource,
    Monostatic,
    Receiver,
    Scenario,
    received_power,
)
from .units import (
    BandwidthHz,
    DistanceMeters,
    FieldStrengthDbuV,
    FrequencyHz,
    GainDbi,
    PowerWatts,
    dbm_from_watts,
)


def fmt(x: float) -> str:
    return format(x, ".9g")


@dataclass
class CsvTable:
    header: list[str]
    rows: list[list[str]]

    def render(self) -> str:
        lines = [",".join(self.header)]
        lines.extend(",".join(row) for row in self.rows)
        return "\n".join(lines) + "\n"


# Presentation of the swept column: (header name, linear value -> cell value)
_SWEPT_COLUMNS = {
    "R": ("r_m", lambda v: v),
    "R_C": ("r_c_m", lambda v: v),
    "R_RX": ("r_rx_m", lambda v: v),
    "P_C": ("p_c_dbm", lambda v: float(dbm_from_watts(v))),
    "f_c": ("f_c_hz", lambda v: v),
    "W": ("w_hz", lambda v: v),
    "G": ("g_dbi", lambda v: 10.0 * math.log10(v)),
    "SNR": ("snr_db", lambda v: 10.0 * math.log10(v)),
    "E_field": ("e_field_dbuv_m", lambda v: 20.0 * math.log10(v * 1e6)),
}


def result_cells(p_rx_w: float, result: CapacityResult) -> list[str]:
    """p_rx_dbm, snr_db, c_infinity_bps, c_w_bps, regime as CSV cells."""
    cells = [fmt(float(dbm_from_watts(p_rx_w)))]
    if result.snr_linear is None:
        cells.append("")
    else:
        cells.append(fmt(10.0 * math.log10(result.snr_linear)))
    cells.append(fmt(float(result.c_infinity)))
    cells.append("" if result.c_bandwidth is None else fmt(float(result.c_bandwidth)))
    cells.append("" if result.regime is None else result.regime.value)
    return cells


RESULT_HEADER = ["p_rx_dbm", "snr_db", "c_infinity_bps", "c_w_bps", "regime"]


def _apply_to_scenario(s: Scenario, parameter: str, v: float) -> Scenario:
    if parameter == "R":
        return replace(s, geometry=Monostatic(DistanceMeters(v)))
    if parameter == "R_C":
        return replace(s, geometry=Bistatic(DistanceMeters(v), s.geometry.r_rx))
    if parameter == "R_RX":
        return replace(s, geometry=Bistatic(s.geometry.r_c, DistanceMeters(v)))
    if parameter == "P_C":
        return with_carrier_power(s, PowerWatts(v))
    if parameter == "f_c":
        return replace(s, carrier_frequency=FrequencyHz(v))
    if parameter == "W":
        return replace(s, bandwidth=BandwidthHz(v))
    if parameter == "G":
        gain = GainDbi(10.0 * math.log10(v))
        return replace(
            s,
            source=CarrierSource(s.source.power_w, gain),
            receiver=Receiver(gain, s.receiver.noise_figure),
        )
    raise ValueError(f"sweep parameter {parameter!r} does not apply to this scenario")


def _apply_to_ambient(a: AmbientScenario, parameter: str, v: float) -> AmbientScenario:
    if parameter == "R_RX":
        return replace(a, r_rx=DistanceMeters(v))
    if parameter == "W":
        return replace(a, bandwidth=BandwidthHz(v))
    if parameter == "E_field":
        if a.field_strength is None:
            raise ValueError("E_field sweep needs a field-strength ambient scenario")
        return replace(a, field_strength=FieldStrengthDbuV(20.0 * math.log10(v * 1e6)))
    raise ValueError(f"sweep parameter {parameter!r} does not apply to ambient scenarios")


def snr_point(snr_linear: float, w_hz: float, noise: NoiseModel) -> tuple[float, CapacityResult]:
    """Implied received power and bounds for a directly-chosen SNR."""
    p_rx = snr_linear * noise.density_w_hz * w_hz
    result = CapacityResult(
        c_infinity=absolute_bound(p_rx, noise),
        c_bandwidth=bandwidth_limited_bound(p_rx, noise, w_hz),
        snr_linear=snr_linear,
        regime=Regime.BANDWIDTH_LIMITED if snr_linear >= 1.0 else Regime.POWER_LIMITED,
    )
    return p_rx, result


def _snr_sweep_rows(spec: SweepSpec, w_hz: float, noise: NoiseModel) -> list[list[str]]:
    rows = []
    for v in spec.values():
        p_rx, result = snr_point(v, w_hz, noise)
        cells = result_cells(p_rx, result)
        del cells[1]  # the swept column already is the SNR
        rows.append([fmt(10.0 * math.log10(v))] + cells)
    return rows


def sweep_table(cfg: ScenarioConfig) -> CsvTable:
    """Evaluate the config's sweep block into a CSV table."""
    spec = cfg.sweep
    if spec is None:
        raise ValueError("config has no sweep block")
    scenario = cfg.scenario
    col_name, present = _SWEPT_COLUMNS[spec.parameter]
    header = [col_name] + RESULT_HEADER

    if spec.parameter == "SNR":
        if scenario.bandwidth is None:
            raise ValueError("an SNR sweep needs a finite bandwidth")
        noise = NoiseModel(noise_figure=scenario.receiver.noise_figure)
        header = [col_name] + [h for h in RESULT_HEADER if h != "snr_db"]
        return CsvTable(header, _snr_sweep_rows(spec, float(scenario.bandwidth), noise))

    rows = []
    for v in spec.values():
        if isinstance(scenario, AmbientScenario):
            point = _apply_to_ambient(scenario, spec.parameter, v)
            p_rx = float(ambient_received_power(point))
            result = ambient_capacity(point)
        else:
            point = _apply_to_scenario(scenario, spec.parameter, v)
            p_rx = float(received_power(point))
            result = capacity(point)
        rows.append([fmt(present(v))] + result_cells(p_rx, result))
    return CsvTable(header, rows)
