"""Finite-dimensional Leavitt path algebras of acyclic multigraphs.

Classification by sink path counts, canonical truncated trees with their
bit codes, extremal dimension formulas over trees with witnesses, the
line-graph census, and brute-force verification of every closed form.
"""

from .classify import (
    SemisimpleType,
    classification,
    dimension,
    has_trivial_ideal,
    kappa,
    line_realizable,
    lpa_isomorphic,
    normalize_type,
    path_counts,
    semisimple_type,
)
from .extremal import (
    BunchTuple,
    ExtremalReport,
    bunch_tree,
    bunch_tuple_dimension,
    dominating_bunch_tuple,
    fan_tree,
    max_dim,
    max_dim_fixed_sinks,
    min_dim,
    min_dim_fixed_sinks,
    rebalance_step,
)
from .graphs import (
    CycleError,
    DirectedMultigraph,
    Edge,
    GraphFormatError,
    has_isolated_vertices,
    is_acyclic,
    is_bunch_tree,
    is_line_graph,
    is_tree,
    is_weakly_connected,
    parse_graph,
    serialize_graph,
    sinks,
    sources,
    to_dot,
    topological_order,
    total_degree,
)
from .partitions import (
    PartitionTable,
    enumerate_line_types,
    line_algebra_count,
    partition_count,
    partitions_of,
)
from .truncate import (
    TruncatedTree,
    alpha_decode,
    alpha_encode,
    d_values,
    enumerate_truncated_trees,
    truncated_tree,
)

__version__ = "0.1.0"

__all__ = [
    "BunchTuple",
    "CycleError",
    "DirectedMultigraph",
    "Edge",
    "ExtremalReport",
    "GraphFormatError",
    "PartitionTable",
    "SemisimpleType",
    "TruncatedTree",
    "alpha_decode",
    "alpha_encode",
    "bunch_tree",
    "bunch_tuple_dimension",
    "classification",
    "d_values",
    "dimension",
    "dominating_bunch_tuple",
    "enumerate_line_types",
    "enumerate_truncated_trees",
    "fan_tree",
    "has_isolated_vertices",
    "has_trivial_ideal",
    "is_acyclic",
    "is_bunch_tree",
    "is_line_graph",
    "is_tree",
    "is_weakly_connected",
    "kappa",
    "line_algebra_count",
    "line_realizable",
    "lpa_isomorphic",
    "max_dim",
    "max_dim_fixed_sinks",
    "min_dim",
    "min_dim_fixed_sinks",
    "normalize_type",
    "parse_graph",
    "partition_count",
    "partitions_of",
    "path_counts",
    "rebalance_step",
    "semisimple_type",
    "serialize_graph",
    "sinks",
    "sources",
    "to_dot",
    "topological_order",
    "total_degree",
    "truncated_tree",
]
