import math

import pytest

from bsclink import (
    BandwidthHz,
    DataRateBps,
    Decibel,
    DistanceMeters,
    Efficiency,
    FieldStrengthDbuV,
    FrequencyHz,
    GainDbi,
    PowerDbm,
    PowerWatts,
    SPEED_OF_LIGHT,
    TemperatureKelvin,
    db_from_linear,
    dbm_from_watts,
    eirp_from_erp,
    linear_from_db,
    watts_from_dbm,
    wavelength,
)
from bsclink.units import coerce

MAGNITUDES = [1e-18, 1e-12, 1e-6, 1e-3, 1.0, 12.7, 1e3, 1e6]


@pytest.mark.parametrize("x", MAGNITUDES)
def test_db_linear_roundtrip(x):
    assert linear_from_db(db_from_linear(x)) == pytest.approx(x, rel=1e-12)


@pytest.mark.parametrize("w", MAGNITUDES)
def test_dbm_watts_roundtrip(w):
    assert float(watts_from_dbm(dbm_from_watts(w))) == pytest.approx(w, rel=1e-12)


def test_db_from_linear_values():
    assert float(db_from_linear(1.0)) == 0.0
    assert float(db_from_linear(1000.0)) == pytest.approx(30.0, abs=1e-12)
    # pocket-calculator 10*log10(1.58); the +1 dB-per-antenna factor
    assert float(db_from_linear(1.58)) == pytest.approx(1.986571, abs=1e-5)


def test_linear_from_db_values():
    assert linear_from_db(Decibel(0.0)) == 1.0
    assert linear_from_db(20.0) == pytest.approx(100.0, rel=1e-12)
    # -1.59 dB is the error-free Eb/N0 floor, ln 2
    assert linear_from_db(-1.59) == pytest.approx(math.log(2.0), rel=1e-3)


def test_watts_from_dbm_values():
    assert float(watts_from_dbm(28.0)) == pytest.approx(0.631, rel=2e-3)
    assert float(watts_from_dbm(PowerDbm(0.0))) == pytest.approx(1e-3, rel=1e-12)
    assert float(watts_from_dbm(36.0)) == pytest.approx(3.98, rel=5e-3)
    assert abs(float(watts_from_dbm(36.0)) / 4.0 - 1.0) < 5e-3


def test_eirp_from_erp():
    assert float(eirp_from_erp(PowerWatts(2.0))) == pytest.approx(3.28, rel=1e-12)
    assert float(eirp_from_erp(PowerWatts(1.0))) == pytest.approx(1.64, rel=1e-12)
    assert float(eirp_from_erp(PowerWatts(0.5))) == pytest.approx(0.82, rel=1e-12)
    # linearity is exact
    assert float(eirp_from_erp(PowerWatts(2.6))) == 2.0 * float(eirp_from_erp(PowerWatts(1.3)))


def test_wavelength():
    assert float(wavelength(FrequencyHz(SPEED_OF_LIGHT))) == pytest.approx(1.0, rel=1e-12)
    assert float(wavelength(900e6)) == pytest.approx(0.333102731, rel=1e-9)
    assert float(wavelength(200e6)) == pytest.approx(1.498962290, rel=1e-9)


def test_log_homomorphism(rng):
    for _ in range(200):
        a = 10.0 ** rng.uniform(-9.0, 6.0)
        b = 10.0 ** rng.uniform(-9.0, 6.0)
        lhs = float(db_from_linear(a * b))
        rhs = float(db_from_linear(a)) + float(db_from_linear(b))
        assert lhs == pytest.approx(rhs, abs=1e-9)


@pytest.mark.parametrize(
    "build",
    [
        lambda: PowerWatts(0.0),
        lambda: PowerWatts(-1.0),
        lambda: PowerWatts(float("inf")),
        lambda: PowerWatts(float("nan")),
        lambda: Efficiency(0.0),
        lambda: Efficiency(1.0001),
        lambda: Efficiency(-0.5),
        lambda: Decibel(float("nan")),
        lambda: Decibel(float("inf")),
        lambda: GainDbi(float("nan")),
        lambda: FrequencyHz(0.0),
        lambda: FrequencyHz(-900e6),
        lambda: BandwidthHz(0.0),
        lambda: DistanceMeters(-1.0),
        lambda: DistanceMeters(0.0),
        lambda: DataRateBps(-1.0),
        lambda: TemperatureKelvin(0.0),
        lambda: FieldStrengthDbuV(float("nan")),
        lambda: PowerDbm(float("inf")),
    ],
)
def test_invalid_quantities_rejected(build):
    with pytest.raises(ValueError):
        build()


def test_boundary_values_allowed():
    assert float(DataRateBps(0.0)) == 0.0
    assert float(Efficiency(1.0)) == 1.0


def test_converters_reject_bad_input():
    with pytest.raises(ValueError):
        db_from_linear(0.0)
    with pytest.raises(ValueError):
        db_from_linear(-2.0)
    with pytest.raises(ValueError):
        linear_from_db(float("nan"))
    with pytest.raises(ValueError):
        dbm_from_watts(0.0)
    with pytest.raises(ValueError):
        watts_from_dbm(float("inf"))


def test_coerce_guards_unit_mixups():
    assert coerce(PowerWatts, 2.0, "p") == PowerWatts(2.0)
    assert coerce(PowerWatts, PowerWatts(2.0), "p") == PowerWatts(2.0)
    with pytest.raises(TypeError):
        coerce(PowerWatts, GainDbi(3.0), "p")
    with pytest.raises(TypeError):
        coerce(PowerWatts, True, "p")
    with pytest.raises(ValueError):
        coerce(PowerWatts, -1.0, "p")


def test_quantities_are_immutable():
    p = PowerWatts(1.0)
    with pytest.raises(AttributeError):
        p.value = 2.0
