"""Dimension-tagged scalar quantities and dB/linear conversions.

Every quantity is an immutable wrapper around one float, validated on
construction so that an invalid value (negative watts, efficiency above 1,
non-finite dB, ...) is unrepresentable afterwards. All physics elsewhere in
the package is computed in linear SI units (watts, Hz, m); the dB-domain
types exist for API and presentation boundaries only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SPEED_OF_LIGHT = 299_792_458.0  # m/s, exact SI value
ERP_TO_EIRP = 1.64  # half-wave dipole gain relative to isotropic, linear


@dataclass(frozen=True)
class _Quantity:
    """Base for single-float quantities: normalizes to float, then validates."""

    value: float

    def __post_init__(self) -> None:
        if isinstance(self.value, str):
            raise TypeError(f"{type(self).__name__} takes a number, not a string")
        object.__setattr__(self, "value", float(self.value))
        self._check(self.value)

    def _check(self, v: float) -> None:
        if not math.isfinite(v):
            raise ValueError(f"{type(self).__name__} must be finite, got {v!r}")

    def __float__(self) -> float:
        return self.value


class _PositiveQuantity(_Quantity):
    def _check(self, v: float) -> None:
        if not math.isfinite(v) or v <= 0.0:
            raise ValueError(
                f"{type(self).__name__} must be a positive finite number, got {v!r}"
            )


class Decibel(_Quantity):
    """Dimensionless power ratio expressed in dB."""


class PowerWatts(_PositiveQuantity):
    """Power in watts, strictly positive."""


class PowerDbm(_Quantity):
    """Power in dBm (dB relative to 1 mW)."""


class GainDbi(_Quantity):
    """Antenna gain relative to an isotropic radiator, in dBi."""


class FrequencyHz(_PositiveQuantity):
    pass


class BandwidthHz(_PositiveQuantity):
    pass


class DistanceMeters(_PositiveQuantity):
    pass


class TemperatureKelvin(_PositiveQuantity):
    pass


class DataRateBps(_Quantity):
    """Data rate in bits per second; zero is allowed (dead link)."""

    def _check(self, v: float) -> None:
        if not math.isfinite(v) or v < 0.0:
            raise ValueError(f"data rate must be >= 0 and finite, got {v!r}")


class Efficiency(_Quantity):
    """Dimensionless fraction in (0, 1]."""

    def _check(self, v: float) -> None:
        if not math.isfinite(v) or not 0.0 < v <= 1.0:
            raise ValueError(f"efficiency must lie in (0, 1], got {v!r}")


class FieldStrengthDbuV(_Quantity):
    """Electric field strength in dB relative to 1 uV/m."""


def coerce(qtype: type, value, what: str):
    """Return ``value`` as quantity type ``qtype``, accepting plain numbers.

    A bare int/float is wrapped (and therefore validated); an instance of a
    *different* quantity type is rejected, which is what catches unit
    mix-ups at model-construction time.
    """
    if isinstance(value, qtype):
        return value
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return qtype(float(value))
    raise TypeError(
        f"{what} expects {qtype.__name__} or a plain number, got {type(value).__name__}"
    )


def db_from_linear(x: float) -> Decibel:
    """10*log10(x) for a positive linear power ratio."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"linear ratio must be positive and finite, got {x!r}")
    return Decibel(10.0 * math.log10(x))


def linear_from_db(d: Decibel | float) -> float:
    """10^(d/10); inverse of db_from_linear."""
    d = float(d)
    if not math.isfinite(d):
        raise ValueError(f"dB value must be finite, got {d!r}")
    return 10.0 ** (d / 10.0)


def watts_from_dbm(p: PowerDbm | float) -> PowerWatts:
    p = float(p)
    if not math.isfinite(p):
        raise ValueError(f"power in dBm must be finite, got {p!r}")
    return PowerWatts(10.0 ** ((p - 30.0) / 10.0))


def dbm_from_watts(p: PowerWatts | float) -> PowerDbm:
    p = float(p)
    if not math.isfinite(p) or p <= 0.0:
        raise ValueError(f"power in watts must be positive and finite, got {p!r}")
    return PowerDbm(10.0 * math.log10(p) + 30.0)


def eirp_from_erp(p: PowerWatts | float) -> PowerWatts:
    """Convert effective radiated power (dipole-referenced) to EIRP.

    1 W ERP radiates like 1.64 W EIRP because the half-wave dipole
    reference antenna itself has 2.15 dBi of gain.
    """
    return PowerWatts(float(p) * ERP_TO_EIRP)


def wavelength(f: FrequencyHz | float) -> DistanceMeters:
    """Free-space wavelength c0/f."""
    f = float(f)
    if not math.isfinite(f) or f <= 0.0:
        raise ValueError(f"frequency must be positive and finite, got {f!r}")
    return DistanceMeters(SPEED_OF_LIGHT / f)
