"""Community detection on weighted graphs via exact resolution sweeps."""

from .errors import (
    DisconnectedError,
    FormatError,
    IllegalStateError,
    IsolatedVertexError,
    SizeLimitError,
)
from .graph import (
    Graph,
    connected_components,
    format_edge_list,
    load_edge_list,
    min_cut,
    quotient,
)
from .partition import (
    Partition,
    compose,
    format_partition,
    parse_partition,
    refine_connected,
    refines,
    singleton_partition,
)
from .measures import CommunityAggregates
from .modularity import (
    BoundsReport,
    bounds_report,
    is_merge_stable,
    merge_gain,
    modularity,
    modularity_complement,
    resolution,
)
from .engine import SweepEngine, TraceRecord, detect_communities, format_trace_csv
from .generators import (
    TreeBound,
    complete_binary_tree,
    daisy_graph,
    daisy_reference_modularity,
    daisy_stable_petal_count,
    tree_bound,
    tree_core_modularity,
    tree_core_partition,
    tree_modularity_identity,
    tree_score_profile,
)
from .oracle import OracleResult, best_partition, is_coarsening_optimal, set_partitions

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "CommunityAggregates",
    "DisconnectedError",
    "FormatError",
    "Graph",
    "IllegalStateError",
    "IsolatedVertexError",
    "OracleResult",
    "Partition",
    "SizeLimitError",
    "SweepEngine",
    "TraceRecord",
    "TreeBound",
    "best_partition",
    "bounds_report",
    "complete_binary_tree",
    "compose",
    "connected_components",
    "daisy_graph",
    "daisy_reference_modularity",
    "daisy_stable_petal_count",
    "detect_communities",
    "format_edge_list",
    "format_partition",
    "format_trace_csv",
    "is_coarsening_optimal",
    "is_merge_stable",
    "load_edge_list",
    "merge_gain",
    "min_cut",
    "modularity",
    "modularity_complement",
    "parse_partition",
    "quotient",
    "refine_connected",
    "refines",
    "resolution",
    "set_partitions",
    "singleton_partition",
    "tree_bound",
    "tree_core_modularity",
    "tree_core_partition",
    "tree_modularity_identity",
    "tree_score_profile",
]
