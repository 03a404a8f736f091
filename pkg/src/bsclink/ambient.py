"""Ambient-carrier backscatter: broadcast signals as the illumination source.

Instead of a dedicated carrier, the device rides on a signal that already
exists (DAB radio, cellular downlink, ...). The forward hop is then
characterized either by the broadcast field strength at the device or
directly by the power available at the device antenna output; only the
single return hop to the receiver remains a Friis link:

    P_RX = G_RX * G_device * (c0 / (4 pi R_RX f))^2 * mu * P_device

Field strength converts to device input power through the effective
aperture of the device antenna, P = (E^2 / Z0) * G * lambda^2 / (4 pi),
with Z0 = 120 pi ohms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .capacity import CapacityResult, NoiseModel, absolute_bound, bandwidth_limited_bound
from .capacity import Regime, snr as snr_of
from .linkmodel import BackscatterDevice, LinkBudget, Receiver, fspl_db
from .units import (
    BandwidthHz,
    Decibel,
    DistanceMeters,
    FieldStrengthDbuV,
    FrequencyHz,
    GainDbi,
    PowerWatts,
    SPEED_OF_LIGHT,
    coerce,
    dbm_from_watts,
    linear_from_db,
)

FREE_SPACE_IMPEDANCE = 120.0 * math.pi  # ohms


@dataclass(frozen=True)
class AmbientScenario:
    """Backscatter link fed by an ambient source.

    Exactly one of ``field_strength`` (converted through the device antenna
    aperture) or ``device_input_power`` (given directly) describes the
    forward illumination.
    """

    device: BackscatterDevice
    receiver: Receiver
    r_rx: DistanceMeters
    carrier_frequency: FrequencyHz
    bandwidth: BandwidthHz | None = None
    field_strength: FieldStrengthDbuV | None = None
    device_input_power: PowerWatts | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "r_rx", coerce(DistanceMeters, self.r_rx, "r_rx"))
        object.__setattr__(
            self,
            "carrier_frequency",
            coerce(FrequencyHz, self.carrier_frequency, "carrier_frequency"),
        )
        if self.bandwidth is not None:
            object.__setattr__(
                self, "bandwidth", coerce(BandwidthHz, self.bandwidth, "bandwidth")
            )
        if (self.field_strength is None) == (self.device_input_power is None):
            raise ValueError(
                "provide exactly one of field_strength or device_input_power"
            )
        if self.field_strength is not None:
            object.__setattr__(
                self,
                "field_strength",
                coerce(FieldStrengthDbuV, self.field_strength, "field_strength"),
            )
        if self.device_input_power is not None:
            object.__setattr__(
                self,
                "device_input_power",
                coerce(PowerWatts, self.device_input_power, "device_input_power"),
            )


def power_from_field(
    e: FieldStrengthDbuV | float, g: GainDbi | float, f: FrequencyHz | float
) -> PowerWatts:
    """Power an antenna of gain ``g`` captures from field strength ``e``.

    The incident power density E^2/Z0 is multiplied by the effective
    aperture G * lambda^2 / (4 pi). Field strength goes 20-log: +x dBuV/m
    of field is +x dB of power.
    """
    e_v_per_m = 10.0 ** (float(e) / 20.0) * 1e-6
    lam = SPEED_OF_LIGHT / float(f)
    aperture = linear_from_db(float(g)) * lam * lam / (4.0 * math.pi)
    return PowerWatts(e_v_per_m * e_v_per_m / FREE_SPACE_IMPEDANCE * aperture)


def device_power(a: AmbientScenario) -> PowerWatts:
    """Resolve the device input power, converting field strength if needed."""
    if a.device_input_power is not None:
        return a.device_input_power
    return power_from_field(a.field_strength, a.device.gain, a.carrier_frequency)


def ambient_received_power(a: AmbientScenario) -> PowerWatts:
    """Receiver power over the single device-to-receiver hop."""
    p_dev = float(device_power(a))
    amp = SPEED_OF_LIGHT / (4.0 * math.pi * float(a.r_rx) * float(a.carrier_frequency))
    return PowerWatts(
        linear_from_db(float(a.receiver.gain))
        * linear_from_db(float(a.device.gain))
        * amp
        * amp
        * float(a.device.efficiency)
        * p_dev
    )


def ambient_link_budget(a: AmbientScenario) -> LinkBudget:
    """dB ledger for the ambient link (device input power downward)."""
    entries = (
        ("device input power", Decibel(float(dbm_from_watts(device_power(a))))),
        ("backscatter efficiency", Decibel(10.0 * math.log10(float(a.device.efficiency)))),
        ("device antenna gain (return hop)", Decibel(float(a.device.gain))),
        ("receiver antenna gain", Decibel(float(a.receiver.gain))),
        (
            "path loss (return hop)",
            Decibel(-fspl_db(a.r_rx, a.carrier_frequency)),
        ),
    )
    p_rx = ambient_received_power(a)
    return LinkBudget(
        entries=entries,
        received_power=p_rx,
        received_power_dbm=dbm_from_watts(p_rx),
    )


def ambient_capacity(a: AmbientScenario, noise: NoiseModel | None = None) -> CapacityResult:
    """Capacity bounds of the ambient link; defaults the noise figure from
    the scenario receiver, like the dedicated-carrier path."""
    if noise is None:
        noise = NoiseModel(noise_figure=a.receiver.noise_figure)
    p_rx = ambient_received_power(a)
    c_inf = absolute_bound(p_rx, noise)
    if a.bandwidth is None:
        return CapacityResult(c_infinity=c_inf)
    ratio = snr_of(p_rx, noise, a.bandwidth)
    c_w = bandwidth_limited_bound(p_rx, noise, a.bandwidth)
    regime = Regime.BANDWIDTH_LIMITED if ratio >= 1.0 else Regime.POWER_LIMITED
    return CapacityResult(
        c_infinity=c_inf, c_bandwidth=c_w, snr_linear=ratio, regime=regime
    )


@dataclass(frozen=True)
class AmbientPreset:
    """Named ambient illumination level at a carrier frequency."""

    id: str
    frequency: FrequencyHz
    field_strength: FieldStrengthDbuV | None = None
    device_power_dbm: float | None = None
    description: str = ""


# DAB_RURAL_90: field strength a DAB network plans for 90% rural area
# coverage at 200 MHz; the LEVEL_* presets are flat device-input levels for
# comparing ambient signal strengths.
AMBIENT_PRESETS: dict[str, AmbientPreset] = {
    p.id: p
    for p in (
        AmbientPreset(
            id="DAB_RURAL_90",
            frequency=FrequencyHz(200e6),
            field_strength=FieldStrengthDbuV(38.64),
            description="DAB rural 90%-coverage planning field strength",
        ),
        AmbientPreset(
            id="LEVEL_M90",
            frequency=FrequencyHz(200e6),
            device_power_dbm=-90.0,
            description="-90 dBm at the device",
        ),
        AmbientPreset(
            id="LEVEL_M80",
            frequency=FrequencyHz(200e6),
            device_power_dbm=-80.0,
            description="-80 dBm at the device",
        ),
        AmbientPreset(
            id="LEVEL_M70",
            frequency=FrequencyHz(200e6),
            device_power_dbm=-70.0,
            description="-70 dBm at the device",
        ),
    )
}
