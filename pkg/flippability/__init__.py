"""
flippability

Flippable, simultaneously flippable and ps-flippable edge sets, plus the
separability ledger of convex decompositions.
"""

from flippability.decomposition import (
    ConvexDecomposition,
    FaceMap,
    check_decomposition,
    completion_count,
    exact_max_ps_flippable,
    greedy_ps_flippable,
)
from flippability.flippable import (
    conflict_graph,
    flippable_set,
    greedy_simultaneously_flippable,
    is_simultaneously_flippable,
    max_simultaneously_flippable,
    simultaneously_flippable,
)
from flippability.independent_set import greedy_independent_set, maximum_independent_set
from flippability.separability import decomposition_check, is_separable, separability_report, separable_edges

__all__ = [
    "ConvexDecomposition",
    "FaceMap",
    "check_decomposition",
    "completion_count",
    "conflict_graph",
    "decomposition_check",
    "exact_max_ps_flippable",
    "flippable_set",
    "greedy_independent_set",
    "greedy_ps_flippable",
    "greedy_simultaneously_flippable",
    "is_separable",
    "is_simultaneously_flippable",
    "max_simultaneously_flippable",
    "maximum_independent_set",
    "separability_report",
    "separable_edges",
    "simultaneously_flippable",
]
