"""License-exempt band profiles and carrier-power limit enforcement.

The built-in profiles cover the US FCC 15.247 ISM bands and the European
ETSI EN 302 208 / EN 300 440 short-range-device bands commonly used for
dedicated backscatter carriers. Each profile carries its power limit in the
regulator's own terms (EIRP, ERP, or conducted power plus a maximum antenna
gain); ``effective_eirp_limit`` reconciles them to one comparable number.

Band edges are approximated as center +- bandwidth/2; the regulations define
exact edges the profiles do not encode.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .linkmodel import CarrierSource, Scenario
from .units import (
    BandwidthHz,
    FrequencyHz,
    GainDbi,
    PowerWatts,
    coerce,
    eirp_from_erp,
    linear_from_db,
)


@dataclass(frozen=True)
class Eirp:
    """Limit stated directly as EIRP."""

    power: PowerWatts

    def __post_init__(self) -> None:
        object.__setattr__(self, "power", coerce(PowerWatts, self.power, "power"))


@dataclass(frozen=True)
class Erp:
    """Limit stated as ERP (half-wave dipole reference)."""

    power: PowerWatts

    def __post_init__(self) -> None:
        object.__setattr__(self, "power", coerce(PowerWatts, self.power, "power"))


@dataclass(frozen=True)
class ConductedPlusGain:
    """Limit stated as conducted power with a maximum antenna gain."""

    power: PowerWatts
    max_gain: GainDbi

    def __post_init__(self) -> None:
        object.__setattr__(self, "power", coerce(PowerWatts, self.power, "power"))
        object.__setattr__(self, "max_gain", coerce(GainDbi, self.max_gain, "max_gain"))


PowerLimit = Eirp | Erp | ConductedPlusGain


@dataclass(frozen=True)
class BandProfile:
    id: str
    region: str
    center_frequency: FrequencyHz
    max_bandwidth: BandwidthHz
    limit: PowerLimit
    notes: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "center_frequency",
            coerce(FrequencyHz, self.center_frequency, "center_frequency"),
        )
        object.__setattr__(
            self, "max_bandwidth", coerce(BandwidthHz, self.max_bandwidth, "max_bandwidth")
        )
        if not isinstance(self.limit, (Eirp, Erp, ConductedPlusGain)):
            raise TypeError("limit must be Eirp, Erp, or ConductedPlusGain")


class ViolationKind(enum.Enum):
    EIRP_EXCEEDED = "EirpExceeded"
    BANDWIDTH_EXCEEDED = "BandwidthExceeded"
    FREQUENCY_OUT_OF_BAND = "FrequencyOutOfBand"


@dataclass(frozen=True)
class Violation:
    """One limit breach: what was measured against which limit (SI units)."""

    kind: ViolationKind
    measured: float
    limit: float

    def __str__(self) -> str:
        if self.kind is ViolationKind.EIRP_EXCEEDED:
            return f"EirpExceeded: EIRP {self.measured:.6g} W > limit {self.limit:.6g} W"
        if self.kind is ViolationKind.BANDWIDTH_EXCEEDED:
            return (
                f"BandwidthExceeded: W {self.measured:.6g} Hz"
                f" > limit {self.limit:.6g} Hz"
            )
        return (
            f"FrequencyOutOfBand: f_c {self.measured:.6g} Hz"
            f" outside band edge {self.limit:.6g} Hz"
        )


_PROFILES: tuple[BandProfile, ...] = (
    BandProfile(
        id="FCC_915",
        region="US",
        center_frequency=FrequencyHz(915e6),
        max_bandwidth=BandwidthHz(26e6),
        limit=ConductedPlusGain(PowerWatts(1.0), GainDbi(6.0)),
        notes="FCC 15.247 ISM band",
    ),
    BandProfile(
        id="FCC_2400",
        region="US",
        center_frequency=FrequencyHz(2.4e9),
        max_bandwidth=BandwidthHz(83.5e6),
        limit=ConductedPlusGain(PowerWatts(1.0), GainDbi(6.0)),
        notes="FCC 15.247 ISM band",
    ),
    BandProfile(
        id="FCC_5800",
        region="US",
        center_frequency=FrequencyHz(5.8e9),
        max_bandwidth=BandwidthHz(125e6),
        limit=ConductedPlusGain(PowerWatts(1.0), GainDbi(6.0)),
        notes="FCC 15.247 ISM band",
    ),
    BandProfile(
        id="ETSI_868_LOWER",
        region="EU",
        center_frequency=FrequencyHz(868e6),
        max_bandwidth=BandwidthHz(200e3),
        limit=Erp(PowerWatts(2.0)),
        notes="ETSI EN 302 208 lower band",
    ),
    BandProfile(
        id="ETSI_915_UPPER",
        region="EU",
        center_frequency=FrequencyHz(915e6),
        max_bandwidth=BandwidthHz(400e3),
        limit=Erp(PowerWatts(2.0)),
        notes="ETSI EN 302 208 upper band; available only in a few European countries",
    ),
    BandProfile(
        id="ETSI_2400",
        region="EU",
        center_frequency=FrequencyHz(2.4e9),
        max_bandwidth=BandwidthHz(8e6),
        limit=Eirp(PowerWatts(0.5)),
        notes="ETSI EN 300 440; 4 W EIRP allowed for fixed indoor installations",
    ),
)


def builtin_profiles() -> list[BandProfile]:
    """The built-in band profiles, in stable order."""
    return list(_PROFILES)


def profile_by_id(profile_id: str) -> BandProfile:
    for p in _PROFILES:
        if p.id == profile_id:
            return p
    known = ", ".join(p.id for p in _PROFILES)
    raise KeyError(f"unknown band profile {profile_id!r}; known: {known}")


def effective_eirp_limit(p: BandProfile) -> PowerWatts:
    """Collapse any limit kind to the equivalent EIRP in watts."""
    limit = p.limit
    if isinstance(limit, Eirp):
        return limit.power
    if isinstance(limit, Erp):
        return eirp_from_erp(limit.power)
    return PowerWatts(float(limit.power) * linear_from_db(float(limit.max_gain)))


# Tolerance on the EIRP comparison so a carrier sitting exactly at the limit
# (e.g. 28 dBm + 8 dBi against 36 dBm) never trips on rounding.
_EIRP_TOLERANCE_DB = 1e-9


def scenario_eirp(s: Scenario) -> PowerWatts:
    """Radiated EIRP of the scenario's carrier: P_C times source gain."""
    return PowerWatts(float(s.source.power_w) * linear_from_db(float(s.source.gain)))


def validate(s: Scenario, p: BandProfile) -> list[Violation]:
    """Check a scenario against a band profile; violations are data, not errors."""
    violations: list[Violation] = []

    eirp = float(scenario_eirp(s))
    limit = float(effective_eirp_limit(p))
    if 10.0 * math.log10(eirp / limit) > _EIRP_TOLERANCE_DB:
        violations.append(Violation(ViolationKind.EIRP_EXCEEDED, eirp, limit))

    max_w = float(p.max_bandwidth)
    w = math.inf if s.bandwidth is None else float(s.bandwidth)
    if w > max_w:
        violations.append(Violation(ViolationKind.BANDWIDTH_EXCEEDED, w, max_w))

    f = float(s.carrier_frequency)
    center = float(p.center_frequency)
    lo, hi = center - max_w / 2.0, center + max_w / 2.0
    if f < lo:
        violations.append(Violation(ViolationKind.FREQUENCY_OUT_OF_BAND, f, lo))
    elif f > hi:
        violations.append(Violation(ViolationKind.FREQUENCY_OUT_OF_BAND, f, hi))

    return violations


def cap_carrier_power(s: Scenario, p: BandProfile) -> Scenario:
    """Reduce P_C (never the gain) until the carrier EIRP meets the limit.

    Idempotent; a compliant scenario comes back unchanged. Trimming power
    instead of gain means surplus antenna gain still helps on receive.
    """
    limit = float(effective_eirp_limit(p))
    allowed = limit / linear_from_db(float(s.source.gain))
    p_c = float(s.source.power_w)
    if p_c <= allowed:
        return s
    return replace(s, source=CarrierSource(PowerWatts(allowed), s.source.gain))
