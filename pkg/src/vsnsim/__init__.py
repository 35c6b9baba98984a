"""Agent-based simulator of recommendation sharing in a vehicular social network.

Vehicles follow weekly visit plans over points of interest, meet each other
while visiting, and depending on the configured strategy blacklist
disappointing PoIs, refresh their plans from strong friends, or grow their
friend network through introductions.  Runs are fully reproducible from a
seed, and batch experiments aggregate many runs into CSV time series.
"""

from .core import (
    HOURS_PER_WEEK,
    Plan,
    PlanRow,
    Poi,
    TieRecord,
    TieTable,
    Vehicle,
    VehicleState,
    new_plan,
    record_encounter,
    strong_friends,
)
from .engine import SetupError, SimConfig, World, run, setup, tick, vehicle_count_for
from .experiment import (
    AggregateSeries,
    CellAggregate,
    ConfigError,
    ExperimentSpec,
    InvalidConfigValue,
    MissingConfigFile,
    UnknownConfigKey,
    cell_basename,
    load_config,
    parse_config,
    run_cell,
    run_experiment,
    run_seed,
)
from .metrics import (
    MetricsSample,
    RunSeries,
    connectivity_index,
    poi_utilization_sd,
    quality_index,
    weekly_no_visit,
)
from .quality import QualityProcess, experience_of
from .strategy import (
    OutboundDecision,
    StrategyKind,
    check_outbound_as_planned,
    check_outbound_blacklist,
    check_outbound_replace,
    replace_suspended,
    triadic_closure,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateSeries",
    "CellAggregate",
    "ConfigError",
    "ExperimentSpec",
    "HOURS_PER_WEEK",
    "InvalidConfigValue",
    "MetricsSample",
    "MissingConfigFile",
    "OutboundDecision",
    "Plan",
    "PlanRow",
    "Poi",
    "QualityProcess",
    "RunSeries",
    "SetupError",
    "SimConfig",
    "StrategyKind",
    "TieRecord",
    "TieTable",
    "UnknownConfigKey",
    "Vehicle",
    "VehicleState",
    "World",
    "cell_basename",
    "check_outbound_as_planned",
    "check_outbound_blacklist",
    "check_outbound_replace",
    "connectivity_index",
    "experience_of",
    "load_config",
    "new_plan",
    "parse_config",
    "poi_utilization_sd",
    "quality_index",
    "record_encounter",
    "replace_suspended",
    "run",
    "run_cell",
    "run_experiment",
    "run_seed",
    "setup",
    "strong_friends",
    "tick",
    "triadic_closure",
    "vehicle_count_for",
    "weekly_no_visit",
]
