"""Distance-based graph indices with exhaustive small-graph verification.

Computes the GG, NGG, and ABC indices of connected graphs, constructs the
parametric families the extremal results are stated over, enumerates small
graph classes isomorph-free, and checks the extremal claims by exhaustive
scan with exact tie handling.
"""

from .graphs import (
    Graph,
    GraphError,
    all_pairs_distances,
    build_graph,
    canonical_form,
    from_graph6,
    is_bipartite,
    relabel,
    to_graph6,
    two_coloring,
)
from .indices import (
    EdgeSplit,
    IndexValues,
    abc_index,
    all_indices,
    check_bipartite_relation,
    edge_splits,
    gg_index,
    ngg_index,
)
from .families import (
    FamilyError,
    FamilySpec,
    almost_dendrimer,
    complete,
    complete_bipartite,
    construct,
    cycle,
    cycle_hook,
    cycle_pendant,
    ngg_closed,
    ngg_path_closed,
    parse_spec,
    path,
    path_ngg_limit,
    star,
    theta,
)
from .enumeration import (
    Constraints,
    EnumerationBoundError,
    FeasibilityBounds,
    brute_force_classes,
    count_classes,
    enumerate_connected,
    enumerate_trees,
    prufer_trees,
)
from .extremal import (
    ExtremalError,
    ExtremalResult,
    Objective,
    VerificationReport,
    asymptotic_check,
    crossover_scan,
    exact_index_value,
    find_extremal,
    min_bipartite_closed,
    min_bipartite_expected,
    parse_objective,
    probe_conjecture,
    verify_max_bipartite,
    verify_min_bipartite,
    verify_tree_extremals,
)
from .formats import FormatError, decode_graph6, encode_graph6
from .radicals import RadicalSum, sqrt_decompose

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "all_pairs_distances",
    "build_graph",
    "canonical_form",
    "from_graph6",
    "is_bipartite",
    "relabel",
    "to_graph6",
    "two_coloring",
    "EdgeSplit",
    "IndexValues",
    "abc_index",
    "all_indices",
    "check_bipartite_relation",
    "edge_splits",
    "gg_index",
    "ngg_index",
    "FamilyError",
    "FamilySpec",
    "almost_dendrimer",
    "complete",
    "complete_bipartite",
    "construct",
    "cycle",
    "cycle_hook",
    "cycle_pendant",
    "ngg_closed",
    "ngg_path_closed",
    "parse_spec",
    "path",
    "path_ngg_limit",
    "star",
    "theta",
    "Constraints",
    "EnumerationBoundError",
    "FeasibilityBounds",
    "brute_force_classes",
    "count_classes",
    "enumerate_connected",
    "enumerate_trees",
    "prufer_trees",
    "ExtremalError",
    "ExtremalResult",
    "Objective",
    "VerificationReport",
    "asymptotic_check",
    "crossover_scan",
    "exact_index_value",
    "find_extremal",
    "min_bipartite_closed",
    "min_bipartite_expected",
    "parse_objective",
    "probe_conjecture",
    "verify_max_bipartite",
    "verify_min_bipartite",
    "verify_tree_extremals",
    "FormatError",
    "decode_graph6",
    "encode_graph6",
    "RadicalSum",
    "sqrt_decompose",
    "__version__",
]
