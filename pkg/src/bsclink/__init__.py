"""Link-budget and Shannon-capacity bounds for backscatter communication."""

from .units import (
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
from .linkmodel import (
    BackscatterDevice,
    Bistatic,
    CarrierSource,
    GeometryError,
    LinkBudget,
    Monostatic,
    Receiver,
    Scenario,
    bistatic_received_power,
    device_received_power,
    fspl_db,
    link_budget,
    monostatic_received_power,
    received_power,
)
from .capacity import (
    CapacityResult,
    NoiseModel,
    Regime,
    UPTIME_PRESETS,
    UptimeBudget,
    absolute_bound,
    bandwidth_limited_bound,
    capacity,
    eb_n0,
    snr,
    solve_carrier_power_for_rate,
    solve_range_for_rate,
    transition_bandwidth,
    uptime_bits,
    with_carrier_power,
)
from .regulatory import (
    BandProfile,
    ConductedPlusGain,
    Eirp,
    Erp,
    Violation,
    ViolationKind,
    builtin_profiles,
    cap_carrier_power,
    effective_eirp_limit,
    profile_by_id,
    scenario_eirp,
    validate,
)
from .ambient import (
    AMBIENT_PRESETS,
    AmbientPreset,
    AmbientScenario,
    ambient_capacity,
    ambient_link_budget,
    ambient_received_power,
    device_power,
    power_from_field,
)

__version__ = "0.1.0"

__all__ = [
    "AMBIENT_PRESETS",
    "AmbientPreset",
    "AmbientScenario",
    "BackscatterDevice",
    "BandProfile",
    "BandwidthHz",
    "Bistatic",
    "CapacityResult",
    "CarrierSource",
    "ConductedPlusGain",
    "DataRateBps",
    "Decibel",
    "DistanceMeters",
    "Efficiency",
    "Eirp",
    "Erp",
    "FieldStrengthDbuV",
    "FrequencyHz",
    "GainDbi",
    "GeometryError",
    "LinkBudget",
    "Monostatic",
    "NoiseModel",
    "PowerDbm",
    "PowerWatts",
    "Receiver",
    "Regime",
    "SPEED_OF_LIGHT",
    "Scenario",
    "TemperatureKelvin",
    "UPTIME_PRESETS",
    "UptimeBudget",
    "Violation",
    "ViolationKind",
    "absolute_bound",
    "ambient_capacity",
    "ambient_link_budget",
    "ambient_received_power",
    "bandwidth_limited_bound",
    "bistatic_received_power",
    "builtin_profiles",
    "cap_carrier_power",
    "capacity",
    "db_from_linear",
    "dbm_from_watts",
    "device_power",
    "device_received_power",
    "eb_n0",
    "effective_eirp_limit",
    "eirp_from_erp",
    "fspl_db",
    "linear_from_db",
    "link_budget",
    "monostatic_received_power",
    "power_from_field",
    "profile_by_id",
    "received_power",
    "scenario_eirp",
    "snr",
    "solve_carrier_power_for_rate",
    "solve_range_for_rate",
    "transition_bandwidth",
    "uptime_bits",
    "validate",
    "watts_from_dbm",
    "wavelength",
    "with_carrier_power",
]
