"""
enumeration

Exhaustive exact counting over small point sets: triangulations, crossing-free
graphs and their subfamilies, supports, and matrix-tree spanning-tree counts.
"""

from enumeration.plane_graphs import (
    PlaneGraph,
    Predicate,
    SegmentTable,
    count_quadrangulations,
    edge_count_histogram,
    enumerate_plane_graphs,
    forest_counts,
    histogram_csv,
    is_quadrangulation,
    iter_plane_graph_masks,
    iter_plane_graphs,
    parse_predicate,
    to_networkx,
)
from enumeration.spanning_trees import degree_product, spanning_tree_count
from enumeration.support import (
    SupportIndex,
    spanning_tree_identity,
    support,
    support_identity_terms,
    verify_support_identity,
)
from enumeration.triangulations import count_triangulations, enumerate_triangulations, iter_triangulations

__all__ = [
    "PlaneGraph",
    "Predicate",
    "SegmentTable",
    "SupportIndex",
    "count_quadrangulations",
    "count_triangulations",
    "degree_product",
    "edge_count_histogram",
    "enumerate_plane_graphs",
    "enumerate_triangulations",
    "forest_counts",
    "histogram_csv",
    "is_quadrangulation",
    "iter_plane_graph_masks",
    "iter_plane_graphs",
    "iter_triangulations",
    "parse_predicate",
    "spanning_tree_count",
    "spanning_tree_identity",
    "support",
    "support_identity_terms",
    "to_networkx",
    "verify_support_identity",
]
