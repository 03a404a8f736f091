import math

import pytest

from bsclink import (
    AMBIENT_PRESETS,
    AmbientScenario,
    BackscatterDevice,
    BandwidthHz,
    DistanceMeters,
    Efficiency,
    FieldStrengthDbuV,
    FrequencyHz,
    GainDbi,
    PowerWatts,
    Receiver,
    SPEED_OF_LIGHT,
    Scenario,
    ambient_capacity,
    ambient_link_budget,
    ambient_received_power,
    capacity,
    dbm_from_watts,
    device_power,
    power_from_field,
    watts_from_dbm,
)


def dab_scenario(r_rx_m: float = 10.0, bandwidth_hz: float | None = None) -> AmbientScenario:
    return AmbientScenario(
        device=BackscatterDevice(GainDbi(2.15), Efficiency(1.0)),
        receiver=Receiver(GainDbi(8.0)),
        r_rx=DistanceMeters(r_rx_m),
        carrier_frequency=FrequencyHz(200e6),
        bandwidth=None if bandwidth_hz is None else BandwidthHz(bandwidth_hz),
        field_strength=FieldStrengthDbuV(38.64),
    )


def test_power_from_field_dab_reference():
    p = power_from_field(38.64, 2.15, 200e6)
    assert float(dbm_from_watts(p)) == pytest.approx(-82.4495957, abs=1e-6)
    # planning-value check: -82.6 dBm within half a dB
    assert abs(float(dbm_from_watts(p)) - (-82.6)) <= 0.5


def test_power_from_field_is_twenty_log_linear():
    base = float(power_from_field(38.64, 2.15, 200e6))
    up = float(power_from_field(44.64, 2.15, 200e6))
    assert up / base == pytest.approx(10.0 ** 0.6, rel=1e-12)


def test_power_from_field_aperture_scaling():
    # halving the frequency doubles the wavelength: four times the aperture
    base = float(power_from_field(38.64, 2.15, 200e6))
    low = float(power_from_field(38.64, 2.15, 100e6))
    assert low / base == pytest.approx(4.0, rel=1e-12)


def test_ambient_unit_path_gain():
    f = 200e6
    r = SPEED_OF_LIGHT / (4.0 * math.pi * f)
    a = AmbientScenario(
        device=BackscatterDevice(GainDbi(0.0), Efficiency(1.0)),
        receiver=Receiver(GainDbi(0.0)),
        r_rx=DistanceMeters(r),
        carrier_frequency=FrequencyHz(f),
        device_input_power=PowerWatts(1e-8),
    )
    assert float(ambient_received_power(a)) == pytest.approx(1e-8, rel=1e-12)


def test_ambient_inverse_square_single_hop():
    near = float(ambient_received_power(dab_scenario(10.0)))
    far = float(ambient_received_power(dab_scenario(20.0)))
    assert near / far == pytest.approx(4.0, rel=1e-13)


def test_ambient_linear_in_efficiency_and_input_power():
    base = AmbientScenario(
        device=BackscatterDevice(GainDbi(2.15), Efficiency(1.0)),
        receiver=Receiver(GainDbi(8.0)),
        r_rx=DistanceMeters(10.0),
        carrier_frequency=FrequencyHz(200e6),
        device_input_power=PowerWatts(1e-11),
    )
    half_mu = AmbientScenario(
        device=BackscatterDevice(GainDbi(2.15), Efficiency(0.5)),
        receiver=base.receiver,
        r_rx=base.r_rx,
        carrier_frequency=base.carrier_frequency,
        device_input_power=base.device_input_power,
    )
    double_p = AmbientScenario(
        device=base.device,
        receiver=base.receiver,
        r_rx=base.r_rx,
        carrier_frequency=base.carrier_frequency,
        device_input_power=PowerWatts(2e-11),
    )
    p0 = float(ambient_received_power(base))
    assert float(ambient_received_power(half_mu)) == pytest.approx(p0 / 2.0, rel=1e-14)
    assert float(ambient_received_power(double_p)) == pytest.approx(2.0 * p0, rel=1e-14)


def test_device_power_resolution():
    by_field = dab_scenario()
    assert float(device_power(by_field)) == pytest.approx(
        float(power_from_field(38.64, 2.15, 200e6)), rel=1e-12
    )
    given = AmbientScenario(
        device=BackscatterDevice(GainDbi(2.15)),
        receiver=Receiver(GainDbi(8.0)),
        r_rx=DistanceMeters(10.0),
        carrier_frequency=FrequencyHz(200e6),
        device_input_power=watts_from_dbm(-82.6),
    )
    assert float(device_power(given)) == pytest.approx(float(watts_from_dbm(-82.6)))


def test_ambient_scenario_requires_exactly_one_input():
    with pytest.raises(ValueError):
        AmbientScenario(
            device=BackscatterDevice(GainDbi(2.15)),
            receiver=Receiver(GainDbi(8.0)),
            r_rx=DistanceMeters(10.0),
            carrier_frequency=FrequencyHz(200e6),
        )
    with pytest.raises(ValueError):
        AmbientScenario(
            device=BackscatterDevice(GainDbi(2.15)),
            receiver=Receiver(GainDbi(8.0)),
            r_rx=DistanceMeters(10.0),
            carrier_frequency=FrequencyHz(200e6),
            field_strength=FieldStrengthDbuV(38.64),
            device_input_power=PowerWatts(1e-11),
        )


def test_ambient_capacity_square_law_and_ordering():
    near = ambient_capacity(dab_scenario(10.0))
    far = ambient_capacity(dab_scenario(20.0))
    assert float(near.c_infinity) / float(far.c_infinity) == pytest.approx(4.0, rel=1e-12)
    banded = ambient_capacity(dab_scenario(10.0, bandwidth_hz=400e3))
    assert float(banded.c_bandwidth) <= float(banded.c_infinity)


def test_ambient_link_budget_reconciles():
    budget = ambient_link_budget(dab_scenario(25.0))
    assert len(budget.entries) == 5
    assert float(budget.total_dbm) == pytest.approx(
        float(budget.received_power_dbm), abs=1e-9
    )


def test_ambient_presets():
    assert set(AMBIENT_PRESETS) == {"DAB_RURAL_90", "LEVEL_M90", "LEVEL_M80", "LEVEL_M70"}
    dab = AMBIENT_PRESETS["DAB_RURAL_90"]
    assert float(dab.field_strength) == 38.64
    assert float(dab.frequency) == 200e6
    assert AMBIENT_PRESETS["LEVEL_M90"].device_power_dbm == -90.0


def test_ambient_overtakes_dedicated_at_long_range():
    # single-hop decay (R^-2) against the dedicated two-hop decay (R^-4):
    # the ambient/dedicated rate ratio grows monotonically and crosses one
    ranges = [10.0 ** e for e in range(0, 6)]
    ratios = []
    for r in ranges:
        amb = float(ambient_capacity(dab_scenario(r)).c_infinity)
        ded = float(capacity(Scenario.monostatic(r_m=r)).c_infinity)
        ratios.append(amb / ded)
    assert all(b > a for a, b in zip(ratios, ratios[1:]))
    assert ratios[0] < 1.0
    assert ratios[-1] > 1.0
