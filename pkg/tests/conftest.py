import random

import pytest

from bsclink import Scenario


def random_monostatic(rng: random.Random, bandwidth: bool | float | None = None) -> Scenario:
    """Random but physically sane mono-static scenario.

    bandwidth=None leaves W unlimited; True draws a random W; a number
    fixes it.
    """
    if bandwidth is True:
        w = 10.0 ** rng.uniform(3.0, 8.0)
    else:
        w = bandwidth
    return Scenario.monostatic(
        r_m=10.0 ** rng.uniform(-0.3, 2.7),
        power_dbm=rng.uniform(0.0, 36.0),
        gain_dbi=rng.uniform(-5.0, 15.0),
        device_gain_dbi=rng.uniform(-5.0, 6.0),
        efficiency=rng.uniform(0.05, 1.0),
        noise_figure_db=rng.uniform(0.0, 30.0),
        frequency_hz=10.0 ** rng.uniform(8.0, 9.8),
        bandwidth_hz=w,
    )


def random_bistatic(rng: random.Random, bandwidth: bool | float | None = None) -> Scenario:
    if bandwidth is True:
        w = 10.0 ** rng.uniform(3.0, 8.0)
    else:
        w = bandwidth
    return Scenario.bistatic(
        r_c_m=10.0 ** rng.uniform(-0.3, 2.7),
        r_rx_m=10.0 ** rng.uniform(-0.3, 2.7),
        power_dbm=rng.uniform(0.0, 36.0),
        source_gain_dbi=rng.uniform(-5.0, 15.0),
        receiver_gain_dbi=rng.uniform(-5.0, 15.0),
        device_gain_dbi=rng.uniform(-5.0, 6.0),
        efficiency=rng.uniform(0.05, 1.0),
        noise_figure_db=rng.uniform(0.0, 30.0),
        frequency_hz=10.0 ** rng.uniform(8.0, 9.8),
        bandwidth_hz=w,
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
