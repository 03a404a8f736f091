"""Named CSV presets covering the standard analysis sweeps.

Each preset expands to one deterministic CSV (see `sweeps` for the
formatting rules). Multi-curve presets carry a leading ``series`` column.
The reference scenario is the dedicated-carrier default: 28 dBm carrier,
8 dBi shared antenna, 2.15 dBi device, perfect reflection, ideal receiver,
900 MHz, mono-static. Axis grids are chosen to cover the interesting span
of each quantity and are documented per preset below.
"""

from __future__ import annotations

import math
from dataclasses import replace

from .ambient import (
    AMBIENT_PRESETS,
    AmbientScenario,
    ambient_capacity,
    ambient_received_power,
)
from .capacity import (
    CapacityResult,
    NoiseModel,
    Regime,
    UPTIME_PRESETS,
    absolute_bound,
    bandwidth_limited_bound,
    capacity,
    uptime_bits,
)
from .linkmodel import (
    BackscatterDevice,
    Monostatic,
    Receiver,
    Scenario,
    received_power,
)
from .sweeps import RESULT_HEADER, CsvTable, fmt, result_cells, snr_point
from .units import (
    BandwidthHz,
    DistanceMeters,
    Efficiency,
    GainDbi,
    dbm_from_watts,
    watts_from_dbm,
)


def _log_grid(start: float, stop: float, points: int) -> list[float]:
    lo, hi = math.log10(start), math.log10(stop)
    step = (hi - lo) / (points - 1)
    return [10.0 ** (lo + i * step) for i in range(points)]


def _linear_grid(start: float, stop: float, points: int) -> list[float]:
    step = (stop - start) / (points - 1)
    return [start + i * step for i in range(points)]


_RANGE_GRID_M = (1.0, 1000.0, 61)  # log-spaced transmission ranges


def _default_scenario(r_m: float, bandwidth_hz: float | None) -> Scenario:
    return Scenario.monostatic(r_m=r_m, bandwidth_hz=bandwidth_hz)


def fig3() -> CsvTable:
    """Rate vs SNR at W = 400 kHz; SNR -20..60 dB in 1 dB steps."""
    noise = NoiseModel()
    w = 400e3
    rows = []
    for snr_db in _linear_grid(-20.0, 60.0, 81):
        p_rx, result = snr_point(10.0 ** (snr_db / 10.0), w, noise)
        cells = result_cells(p_rx, result)
        del cells[1]  # swept column already is the SNR
        rows.append([fmt(snr_db)] + cells)
    return CsvTable(["snr_db"] + [h for h in RESULT_HEADER if h != "snr_db"], rows)


def fig4() -> CsvTable:
    """Rate vs bandwidth (1 kHz..1 GHz) for fixed received powers.

    Series levels -110/-100/-90 dBm bracket typical backscatter reception.
    """
    noise = NoiseModel()
    rows = []
    for p_dbm in (-110.0, -100.0, -90.0):
        label = f"P_RX_{p_dbm:g}dBm"
        p_rx = float(watts_from_dbm(p_dbm))
        for w in _log_grid(1e3, 1e9, 61):
            snr_lin = p_rx / (noise.density_w_hz * w)
            result = CapacityResult(
                c_infinity=absolute_bound(p_rx, noise),
                c_bandwidth=bandwidth_limited_bound(p_rx, noise, w),
                snr_linear=snr_lin,
                regime=Regime.BANDWIDTH_LIMITED if snr_lin >= 1.0 else Regime.POWER_LIMITED,
            )
            rows.append([label, fmt(w)] + result_cells(p_rx, result))
    return CsvTable(["series", "w_hz"] + RESULT_HEADER, rows)


def _range_sweep_rows(label: str, scenario: Scenario) -> list[list[str]]:
    rows = []
    for r in _log_grid(*_RANGE_GRID_M):
        point = replace(scenario, geometry=Monostatic(DistanceMeters(r)))
        rows.append(
            [label, fmt(r)] + result_cells(float(received_power(point)), capacity(point))
        )
    return rows


def fig5() -> CsvTable:
    """Rate vs range for W = 400 kHz, 8 MHz, and unlimited."""
    rows = []
    for label, w in (("W_400kHz", 400e3), ("W_8MHz", 8e6), ("W_inf", None)):
        rows.extend(_range_sweep_rows(label, _default_scenario(1.0, w)))
    return CsvTable(["series", "r_m"] + RESULT_HEADER, rows)


def fig6() -> CsvTable:
    """Rate vs range for carrier powers 30 dB apart (-2 and 28 dBm), W = 400 kHz."""
    rows = []
    for p_dbm in (-2.0, 28.0):
        s = Scenario.monostatic(r_m=1.0, power_dbm=p_dbm, bandwidth_hz=400e3)
        rows.extend(_range_sweep_rows(f"P_C_{p_dbm:g}dBm", s))
    return CsvTable(["series", "r_m"] + RESULT_HEADER, rows)


def fig7() -> CsvTable:
    """Rate vs range for the three US ISM carrier frequencies, W = 400 kHz."""
    rows = []
    for label, f in (
        ("f_c_915MHz", 915e6),
        ("f_c_2400MHz", 2.4e9),
        ("f_c_5800MHz", 5.8e9),
    ):
        s = Scenario.monostatic(r_m=1.0, frequency_hz=f, bandwidth_hz=400e3)
        rows.extend(_range_sweep_rows(label, s))
    return CsvTable(["series", "r_m"] + RESULT_HEADER, rows)


def fig8() -> CsvTable:
    """Ambient rate vs backscatter range for the named ambient levels.

    200 MHz carrier, 2.15 dBi device, 8 dBi receiver, W = 400 kHz; one
    series per ambient preset (DAB planning field plus flat levels).
    """
    rows = []
    for preset_id in ("DAB_RURAL_90", "LEVEL_M90", "LEVEL_M80", "LEVEL_M70"):
        preset = AMBIENT_PRESETS[preset_id]
        base = AmbientScenario(
            device=BackscatterDevice(GainDbi(2.15), Efficiency(1.0)),
            receiver=Receiver(GainDbi(8.0)),
            r_rx=DistanceMeters(1.0),
            carrier_frequency=preset.frequency,
            bandwidth=BandwidthHz(400e3),
            field_strength=preset.field_strength,
            device_input_power=None
            if preset.device_power_dbm is None
            else watts_from_dbm(preset.device_power_dbm),
        )
        for r in _log_grid(*_RANGE_GRID_M):
            point = replace(base, r_rx=DistanceMeters(r))
            rows.append(
                [preset_id, fmt(r)]
                + result_cells(float(ambient_received_power(point)), ambient_capacity(point))
            )
    return CsvTable(["series", "r_rx_m"] + RESULT_HEADER, rows)


def fig9() -> CsvTable:
    """Bits per carrier burst vs range for the uptime presets.

    Every preset appears once with W = 400 kHz and once with unlimited
    bandwidth (series suffix _inf).
    """
    rows = []
    for preset_name, (uptime_s, period_s) in UPTIME_PRESETS.items():
        for suffix, w in (("400kHz", 400e3), ("inf", None)):
            label = f"{preset_name}_{suffix}"
            s = _default_scenario(1.0, w)
            for r in _log_grid(*_RANGE_GRID_M):
                point = replace(s, geometry=Monostatic(DistanceMeters(r)))
                budget = uptime_bits(point, uptime_s=uptime_s, period_s=period_s)
                rows.append(
                    [
                        label,
                        fmt(r),
                        fmt(float(dbm_from_watts(received_power(point)))),
                        fmt(float(budget.rate_bps)),
                        fmt(budget.bits_per_burst),
                        fmt(budget.average_rate_bps),
                    ]
                )
    return CsvTable(
        ["series", "r_m", "p_rx_dbm", "rate_bps", "bits_per_burst", "avg_rate_bps"], rows
    )


def table1() -> CsvTable:
    """UHF-RFID reader check: 28 dBm, 8 dBi, 915 MHz, mu = 0.25, F = 20 dB,
    W = 26 MHz, at 10 m and 100 m."""
    rows = []
    for r in (10.0, 100.0):
        s = Scenario.monostatic(
            r_m=r,
            frequency_hz=915e6,
            efficiency=0.25,
            noise_figure_db=20.0,
            bandwidth_hz=26e6,
        )
        rows.append([fmt(r)] + result_cells(float(received_power(s)), capacity(s)))
    return CsvTable(["r_m"] + RESULT_HEADER, rows)


FIGURE_PRESETS = {
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
    "fig6": fig6,
    "fig7": fig7,
    "fig8": fig8,
    "fig9": fig9,
    "table1": table1,
}


def build_figure(name: str) -> CsvTable:
    try:
        builder = FIGURE_PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(FIGURE_PRESETS))
        raise KeyError(f"unknown figure preset {name!r}; known presets: {known}") from None
    return builder()
