"""Generation and certification of cyclically 4-connected cubic graphs."""

from .canon import are_isomorphic, certificate, dedup
from .core import CubicGraph, build, edge
from .errors import (
    Disconnected,
    EdgeNotPresent,
    GraphError,
    IdenticalEdges,
    NotCubic,
    NotSimple,
    OddOrder,
    PreconditionViolated,
    SeedNotC5C,
    SimplicityViolation,
)
from .exchange import ExchangeOutcome, exchange_to_wider
from .families import k33, ladder, moebius, petersen, wheel3
from .generate import (
    Census,
    PipelineConfig,
    closure,
    count_report,
    expand,
    pipeline_c5c,
    pipeline_nonplanar,
    pipeline_planar,
    pipeline_wormald,
)
from .spread import CycleSpread, SpreadThreshold, candidate_pairs, configurations, cycle_spread, meets_threshold
from .structure import (
    edge_chromatic_class,
    find_cycle_separating_cut,
    girth,
    is_cyclically_k_connected,
    is_planar,
    is_snark,
    vertex_connectivity,
)
from .transform import bridge, contract_edge, delete_edge, unbridge

__version__ = "0.1.0"
