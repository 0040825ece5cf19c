"""Round-based energy simulator for regional max-energy clustering
(DREEM-ME) and its LEACH / LEACH-C baselines."""

__version__ = "0.1.0"

from .energy import RadioParams, aggregation_cost, rx_cost, tx_cost
from .engine import (
    PROTOCOLS,
    RoundMetrics,
    RunResult,
    SimConfig,
    channel,
    run_many,
    run_once,
)
from .errors import (
    ConfigInvalid,
    EmptyInput,
    EmptyNetwork,
    InvalidRegion,
    NegativeInput,
    OutsideField,
    WsnSimError,
)
from .geometry import (
    FIELD_RADIUS,
    INNER_RADIUS,
    MIDDLE_RADIUS,
    MIDDLE_REGIONS,
    ORIGIN,
    OUTER_REGIONS,
    REGIONS,
    Point,
    RegionSpec,
    distance,
    nearby_regions,
    region_of,
    region_spec,
    relay_target,
    sample_in_region,
)
from .network import Deployment, NodeState, alive_in_region, deploy
from .protocols import (
    LEACH_C_TARGET_HEADS,
    LeachState,
    RoundPlan,
    dreem_energy_round,
    dreem_plan,
    leach_c_plan,
    leach_energy_round,
    leach_plan,
)
from .stats import AGGREGATE_METRICS, AggregateSeries, aggregate

__all__ = [
    "AGGREGATE_METRICS",
    "AggregateSeries",
    "ConfigInvalid",
    "Deployment",
    "EmptyInput",
    "EmptyNetwork",
    "FIELD_RADIUS",
    "INNER_RADIUS",
    "InvalidRegion",
    "LEACH_C_TARGET_HEADS",
    "LeachState",
    "MIDDLE_RADIUS",
    "MIDDLE_REGIONS",
    "NegativeInput",
    "NodeState",
    "ORIGIN",
    "OUTER_REGIONS",
    "OutsideField",
    "PROTOCOLS",
    "Point",
    "RadioParams",
    "RegionSpec",
    "REGIONS",
    "RoundMetrics",
    "RoundPlan",
    "RunResult",
    "SimConfig",
    "WsnSimError",
    "aggregate",
    "aggregation_cost",
    "alive_in_region",
    "channel",
    "deploy",
    "distance",
    "dreem_energy_round",
    "dreem_plan",
    "leach_c_plan",
    "leach_energy_round",
    "leach_plan",
    "nearby_regions",
    "region_of",
    "region_spec",
    "relay_target",
    "run_many",
    "run_once",
    "rx_cost",
    "sample_in_region",
    "tx_cost",
]
