import math

import pytest

from bsclink import (
    BackscatterDevice,
    Bistatic,
    CarrierSource,
    Decibel,
    DistanceMeters,
    Efficiency,
    GainDbi,
    GeometryError,
    Monostatic,
    PowerWatts,
    Receiver,
    SPEED_OF_LIGHT,
    Scenario,
    bistatic_received_power,
    dbm_from_watts,
    device_received_power,
    fspl_db,
    link_budget,
    monostatic_received_power,
    received_power,
)
from conftest import random_bistatic, random_monostatic

TABLE1 = dict(r_m=10.0, frequency_hz=915e6, efficiency=0.25, noise_figure_db=20.0)


def test_device_received_power_reference_value():
    # hand dB ledger: 28.0007 dBm + 8 + 2.15 - FSPL(1 m, 900 MHz) = +6.6177 dBm
    p = device_received_power(
        CarrierSource(PowerWatts(0.631), GainDbi(8.0)),
        BackscatterDevice(GainDbi(2.15)),
        DistanceMeters(1.0),
        900e6,
    )
    assert float(p) == pytest.approx(4.589506805e-3, rel=1e-9)
    assert float(dbm_from_watts(p)) == pytest.approx(6.617660182, abs=1e-8)


def test_device_received_power_inverse_square():
    src = CarrierSource(PowerWatts(0.5), GainDbi(3.0))
    dev = BackscatterDevice(GainDbi(2.15))
    near = float(device_received_power(src, dev, 7.0, 868e6))
    far = float(device_received_power(src, dev, 14.0, 868e6))
    assert near == pytest.approx(4.0 * far, rel=1e-14)


def test_device_received_power_unit_path_gain():
    # at R = c0 / (4 pi f) with isotropic antennas the hop gain is one
    f = 433e6
    r = SPEED_OF_LIGHT / (4.0 * math.pi * f)
    p = device_received_power(
        CarrierSource(PowerWatts(0.25), GainDbi(0.0)),
        BackscatterDevice(GainDbi(0.0)),
        r,
        f,
    )
    assert float(p) == pytest.approx(0.25, rel=1e-12)


def test_monostatic_reference_value():
    s = Scenario.monostatic(**TABLE1)
    p = monostatic_received_power(s)
    assert float(p) == pytest.approx(7.810862416e-10, rel=1e-9)
    assert float(dbm_from_watts(p)) == pytest.approx(-61.07301012, abs=1e-7)


def test_monostatic_forty_db_per_decade():
    p10 = float(dbm_from_watts(received_power(Scenario.monostatic(**TABLE1))))
    p100 = float(
        dbm_from_watts(received_power(Scenario.monostatic(**{**TABLE1, "r_m": 100.0})))
    )
    assert p10 - p100 == pytest.approx(40.0, abs=1e-9)


def test_monostatic_doubling_distance_divides_by_16():
    base = float(received_power(Scenario.monostatic(**TABLE1)))
    doubled = float(received_power(Scenario.monostatic(**{**TABLE1, "r_m": 20.0})))
    assert base == pytest.approx(16.0 * doubled, rel=1e-13)


def test_bistatic_reduces_to_monostatic_bit_for_bit(rng):
    for _ in range(100):
        sm = random_monostatic(rng)
        sb = Scenario(
            source=sm.source,
            device=sm.device,
            receiver=sm.receiver,
            geometry=Bistatic(sm.geometry.r, sm.geometry.r),
            carrier_frequency=sm.carrier_frequency,
        )
        assert float(bistatic_received_power(sb)) == float(monostatic_received_power(sm))


def test_bistatic_linear_in_efficiency():
    full = Scenario.bistatic(r_c_m=3.0, r_rx_m=7.0, efficiency=1.0)
    half = Scenario.bistatic(r_c_m=3.0, r_rx_m=7.0, efficiency=0.5)
    assert float(received_power(half)) == pytest.approx(
        0.5 * float(received_power(full)), rel=1e-15
    )


def test_frequency_fourth_power_law():
    lo = Scenario.bistatic(r_c_m=2.0, r_rx_m=5.0, frequency_hz=900e6)
    hi = Scenario.bistatic(r_c_m=2.0, r_rx_m=5.0, frequency_hz=1800e6)
    assert float(received_power(lo)) == pytest.approx(
        16.0 * float(received_power(hi)), rel=1e-13
    )


def test_power_linear_in_carrier_power(rng):
    for _ in range(20):
        s = random_monostatic(rng)
        boosted = Scenario(
            source=CarrierSource(PowerWatts(float(s.source.power_w) * 3.7), s.source.gain),
            device=s.device,
            receiver=s.receiver,
            geometry=s.geometry,
            carrier_frequency=s.carrier_frequency,
        )
        assert float(received_power(boosted)) == pytest.approx(
            3.7 * float(received_power(s)), rel=1e-12
        )


def test_one_dbi_on_both_roles_gives_two_db(rng):
    for _ in range(20):
        s = random_monostatic(rng)
        g1 = float(s.source.gain) + 1.0
        up = Scenario.monostatic(
            r_m=float(s.geometry.r),
            power_dbm=float(dbm_from_watts(s.source.power_w)),
            gain_dbi=g1,
            device_gain_dbi=float(s.device.gain),
            efficiency=float(s.device.efficiency),
            frequency_hz=float(s.carrier_frequency),
        )
        gain_db = float(dbm_from_watts(received_power(up))) - float(
            dbm_from_watts(received_power(s))
        )
        assert gain_db == pytest.approx(2.0, abs=1e-9)


def test_monotone_decreasing_in_distance_and_frequency():
    powers_r = [
        float(received_power(Scenario.monostatic(r_m=r))) for r in (0.5, 1, 3, 10, 80, 700)
    ]
    assert powers_r == sorted(powers_r, reverse=True)
    powers_f = [
        float(received_power(Scenario.monostatic(r_m=5.0, frequency_hz=f)))
        for f in (200e6, 900e6, 2.4e9, 5.8e9)
    ]
    assert powers_f == sorted(powers_f, reverse=True)


def test_geometry_dispatch_errors():
    mono = Scenario.monostatic(r_m=5.0)
    bi = Scenario.bistatic(r_c_m=2.0, r_rx_m=5.0)
    with pytest.raises(GeometryError):
        bistatic_received_power(mono)
    with pytest.raises(GeometryError):
        monostatic_received_power(bi)


def test_monostatic_rejects_unequal_gains():
    with pytest.raises(ValueError):
        Scenario(
            source=CarrierSource(PowerWatts(0.63), GainDbi(8.0)),
            device=BackscatterDevice(GainDbi(2.15)),
            receiver=Receiver(GainDbi(6.0)),
            geometry=Monostatic(DistanceMeters(10.0)),
            carrier_frequency=915e6,
        )


def test_receiver_rejects_negative_noise_figure():
    with pytest.raises(ValueError):
        Receiver(GainDbi(8.0), Decibel(-1.0))


def test_link_budget_structure_and_total():
    budget = link_budget(Scenario.monostatic(**TABLE1))
    assert len(budget.entries) == 8
    assert float(budget.total_dbm) == pytest.approx(-61.07301012, abs=1e-6)
    assert float(budget.total_dbm) == pytest.approx(
        float(budget.received_power_dbm), abs=1e-9
    )


def test_link_budget_reconciles_randomized(rng):
    for _ in range(50):
        s = random_bistatic(rng)
        budget = link_budget(s)
        assert float(budget.total_dbm) == pytest.approx(
            float(budget.received_power_dbm), abs=1e-9
        )


def test_link_budget_perfect_efficiency_contributes_zero():
    budget = link_budget(Scenario.monostatic(r_m=4.0, efficiency=1.0))
    by_label = dict(budget.entries)
    assert float(by_label["backscatter efficiency"]) == 0.0


def test_link_budget_bistatic_has_distinct_path_losses():
    budget = link_budget(Scenario.bistatic(r_c_m=2.0, r_rx_m=9.0))
    by_label = dict(budget.entries)
    fwd = float(by_label["path loss (forward hop)"])
    ret = float(by_label["path loss (return hop)"])
    assert fwd != ret
    assert fwd == pytest.approx(-fspl_db(2.0, 900e6))
    assert ret == pytest.approx(-fspl_db(9.0, 900e6))
