"""Shannon-capacity bounds for a backscatter link over an AWGN channel.

Two bounds are computed from the received power P_RX:

* absolute bound, unlimited bandwidth:   C_inf = P_RX / (N0_th * F * ln 2)
* bandwidth-limited bound:               C_W   = W * log2(1 + SNR)

with SNR = P_RX / (N0_th * F * W). Error-free communication needs
Eb/N0 >= ln 2 (about -1.59 dB), and C_inf is exactly the rate at which
Eb/N0 hits that floor. Both inverse solvers below are closed-form; the
bandwidth-limited one inverts via SNR_needed = 2^(rate/W) - 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

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
    DataRateBps,
    Decibel,
    DistanceMeters,
    PowerWatts,
    TemperatureKelvin,
    coerce,
    dbm_from_watts,
    watts_from_dbm,
)

LN2 = math.log(2.0)
THERMAL_NOISE_DBM_PER_HZ = -174.0  # one-sided density at 300 K ambient
BOLTZMANN = 1.380649e-23  # J/K, exact SI value
TEN_LOG10_2 = 10.0 * math.log10(2.0)


class Regime(enum.Enum):
    """Which term of the bandwidth-limited bound dominates."""

    POWER_LIMITED = "power-limited"  # SNR < 1: rate scales linearly with power
    BANDWIDTH_LIMITED = "bandwidth-limited"  # SNR >= 1: rate scales with log SNR


@dataclass(frozen=True)
class NoiseModel:
    """Thermal noise density plus receiver noise figure.

    The density default is the flat -174 dBm/Hz convention rather than a
    value recomputed from k*T, so results stay stable against the ambient
    temperature field of a scenario; use :meth:`from_temperature` to derive
    the density physically.
    """

    n0_thermal_dbm_hz: float = THERMAL_NOISE_DBM_PER_HZ
    noise_figure: Decibel = Decibel(0.0)

    def __post_init__(self) -> None:
        if not math.isfinite(self.n0_thermal_dbm_hz):
            raise ValueError("noise density must be finite")
        object.__setattr__(
            self, "noise_figure", coerce(Decibel, self.noise_figure, "noise_figure")
        )
        if float(self.noise_figure) < 0.0:
            raise ValueError("noise figure must be >= 0 dB")

    @classmethod
    def from_temperature(
        cls, t: TemperatureKelvin | float, noise_figure: Decibel | float = 0.0
    ) -> "NoiseModel":
        """Density 10*log10(k*T / 1 mW) derived from an ambient temperature."""
        n0 = 10.0 * math.log10(BOLTZMANN * float(t) / 1e-3)
        return cls(n0_thermal_dbm_hz=n0, noise_figure=Decibel(float(noise_figure)))

    @classmethod
    def for_receiver(cls, receiver: Receiver) -> "NoiseModel":
        return cls(noise_figure=receiver.noise_figure)

    @property
    def density_w_hz(self) -> float:
        """N0_th * F in W/Hz (thermal density degraded by the noise figure)."""
        return float(
            watts_from_dbm(self.n0_thermal_dbm_hz + float(self.noise_figure))
        )


@dataclass(frozen=True)
class CapacityResult:
    """Both bounds for one scenario; the W-dependent fields are None when
    the bandwidth is unlimited."""

    c_infinity: DataRateBps
    c_bandwidth: DataRateBps | None = None
    snr_linear: float | None = None
    regime: Regime | None = None

    def __post_init__(self) -> None:
        if self.c_bandwidth is not None and float(self.c_bandwidth) > float(
            self.c_infinity
        ):
            raise ValueError("bandwidth-limited bound cannot exceed the absolute bound")


def _noise_for(s: Scenario, noise: NoiseModel | None) -> NoiseModel:
    # Default: take F from the scenario's receiver; an explicit NoiseModel
    # overrides it entirely.
    if noise is not None:
        return noise
    return NoiseModel(noise_figure=s.receiver.noise_figure)


def snr(
    p_rx: PowerWatts | float, noise: NoiseModel, w: BandwidthHz | float | None
) -> float:
    """Linear signal-to-noise ratio P_RX / (N0_th * F * W)."""
    if w is None:
        raise ValueError("SNR is undefined for unlimited bandwidth; use the absolute bound")
    return float(p_rx) / (noise.density_w_hz * float(w))


def eb_n0(
    p_rx: PowerWatts | float, rate: DataRateBps | float, noise: NoiseModel
) -> float:
    """Received energy per bit over noise density, P_RX / (rate * N0_th * F)."""
    rate = float(rate)
    if rate <= 0.0:
        raise ValueError("data rate must be positive to define energy per bit")
    return float(p_rx) / (rate * noise.density_w_hz)


def absolute_bound(p_rx: PowerWatts | float, noise: NoiseModel) -> DataRateBps:
    """Highest error-free rate with unlimited bandwidth.

    Linear in P_RX; at this rate Eb/N0 equals ln 2 exactly.
    """
    return DataRateBps(float(p_rx) / (noise.density_w_hz * LN2))


def bandwidth_limited_bound(
    p_rx: PowerWatts | float, noise: NoiseModel, w: BandwidthHz | float
) -> DataRateBps:
    """Highest error-free rate through a band of width W: W * log2(1 + SNR)."""
    w = float(w)
    return DataRateBps(w * math.log1p(snr(p_rx, noise, w)) / LN2)


def transition_bandwidth(p_rx: PowerWatts | float, noise: NoiseModel) -> BandwidthHz:
    """Bandwidth W* at which the SNR crosses 0 dB.

    Below W* the link is bandwidth-limited, above it power-limited.
    """
    return BandwidthHz(float(p_rx) / noise.density_w_hz)


def capacity(s: Scenario, noise: NoiseModel | None = None) -> CapacityResult:
    """Evaluate both bounds for a scenario.

    When ``noise`` is omitted it is built from the scenario receiver's noise
    figure and the standard -174 dBm/Hz floor.
    """
    noise = _noise_for(s, noise)
    p_rx = received_power(s)
    c_inf = absolute_bound(p_rx, noise)
    if s.bandwidth is None:
        return CapacityResult(c_infinity=c_inf)
    ratio = snr(p_rx, noise, s.bandwidth)
    c_w = bandwidth_limited_bound(p_rx, noise, s.bandwidth)
    regime = Regime.BANDWIDTH_LIMITED if ratio >= 1.0 else Regime.POWER_LIMITED
    return CapacityResult(
        c_infinity=c_inf, c_bandwidth=c_w, snr_linear=ratio, regime=regime
    )


def _required_rx_power_dbm(
    target: float, noise: NoiseModel, w: float | None
) -> float:
    # Received power (dBm) at which the applicable bound equals `target`.
    # Kept in the log domain so absurdly high targets stay representable.
    n0f_dbm = noise.n0_thermal_dbm_hz + float(noise.noise_figure)
    if w is None:
        return n0f_dbm + 10.0 * math.log10(target * LN2)
    ratio = target / w
    # 10*log10(2^ratio - 1), stable for both tiny and huge ratios
    snr_db = ratio * TEN_LOG10_2 + 10.0 * math.log10(-math.expm1(-ratio * LN2))
    return n0f_dbm + snr_db + 10.0 * math.log10(w)


def _validated_target(target: DataRateBps | float) -> float:
    t = float(target)
    if t <= 0.0:
        raise ValueError("target data rate must be positive")
    return t


def solve_range_for_rate(
    target: DataRateBps | float,
    s: Scenario,
    noise: NoiseModel | None = None,
    solve_for: str | None = None,
) -> DistanceMeters:
    """Distance at which the scenario's capacity equals ``target``.

    Mono-static scenarios solve for R. Bi-static scenarios solve for the
    distance named by ``solve_for`` ("r_rx", the default, or "r_c") while
    the other hop keeps its scenario value. Closed form: the received power
    requirement is inverted through the R^-4 (mono-static) or R^-2 (one
    free bi-static hop) law. Any positive target is solvable; with finite W
    high targets simply shrink the range.
    """
    t = _validated_target(target)
    noise = _noise_for(s, noise)
    w = None if s.bandwidth is None else float(s.bandwidth)
    p_needed_dbm = _required_rx_power_dbm(t, noise, w)

    if isinstance(s.geometry, Monostatic):
        if solve_for not in (None, "r"):
            raise ValueError("mono-static geometry solves for 'r' only")
        ref = replace(s, geometry=Monostatic(DistanceMeters(1.0)))
        exponent = 40.0  # received power falls 40 dB per decade of R
    else:
        solve_for = "r_rx" if solve_for is None else solve_for
        if solve_for == "r_rx":
            ref_geom = Bistatic(r_c=s.geometry.r_c, r_rx=DistanceMeters(1.0))
        elif solve_for == "r_c":
            ref_geom = Bistatic(r_c=DistanceMeters(1.0), r_rx=s.geometry.r_rx)
        else:
            raise ValueError("solve_for must be 'r_c' or 'r_rx' for bi-static geometry")
        ref = replace(s, geometry=ref_geom)
        exponent = 20.0  # one free hop: 20 dB per decade

    p_ref_dbm = float(dbm_from_watts(received_power(ref)))
    return DistanceMeters(10.0 ** ((p_ref_dbm - p_needed_dbm) / exponent))


def solve_carrier_power_for_rate(
    target: DataRateBps | float,
    s: Scenario,
    noise: NoiseModel | None = None,
) -> PowerWatts:
    """Carrier power at which the scenario's capacity equals ``target``.

    The received power is linear in P_C, so the requirement scales the
    scenario's carrier power by the needed/current received-power ratio.
    """
    t = _validated_target(target)
    noise = _noise_for(s, noise)
    w = None if s.bandwidth is None else float(s.bandwidth)
    p_needed = float(watts_from_dbm(_required_rx_power_dbm(t, noise, w)))
    p_now = float(received_power(s))
    return PowerWatts(float(s.source.power_w) * (p_needed / p_now))


def with_carrier_power(s: Scenario, p_c: PowerWatts | float) -> Scenario:
    """Copy of the scenario with a different carrier power."""
    p_c = coerce(PowerWatts, p_c, "p_c")
    return replace(s, source=CarrierSource(p_c, s.source.gain))


# Carrier uptime presets: (on-air duration s, repetition period s) of common
# ambient signals usable as intermittent carriers.
UPTIME_PRESETS: dict[str, tuple[float, float]] = {
    "wifi_beacon": (1e-3, 100e-3),
    "lte_rs": (130e-6, 5e-3),
    "5g_ssb": (285e-6, 20e-3),
}


@dataclass(frozen=True)
class UptimeBudget:
    """Bits deliverable per carrier burst, and the long-run average rate."""

    rate_bps: DataRateBps
    bits_per_burst: float
    average_rate_bps: float | None = None


def uptime_bits(
    s: Scenario,
    noise: NoiseModel | None = None,
    uptime_s: float = 1e-3,
    period_s: float | None = None,
) -> UptimeBudget:
    """Data volume transferable while an intermittent carrier is on air.

    Uses the bandwidth-limited bound when the scenario has finite W, the
    absolute bound otherwise. With ``period_s`` given, also reports the
    duty-cycled average rate bits_per_burst / period.
    """
    if not uptime_s > 0.0:
        raise ValueError("uptime must be positive")
    if period_s is not None and period_s < uptime_s:
        raise ValueError("period must be >= uptime")
    result = capacity(s, noise)
    rate = result.c_bandwidth if result.c_bandwidth is not None else result.c_infinity
    bits = float(rate) * uptime_s
    avg = None if period_s is None else bits / period_s
    return UptimeBudget(rate_bps=rate, bits_per_burst=bits, average_rate_bps=avg)
