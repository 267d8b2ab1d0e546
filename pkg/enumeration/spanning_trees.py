"""
enumeration/spanning_trees.py

Spanning-tree counts by the matrix-tree theorem: any cofactor of the graph
Laplacian, evaluated as an exact integer determinant.
"""

import logging
from math import prod

import networkx as nx
from sympy import Matrix

from enumeration.plane_graphs import GraphLike, to_networkx

logger = logging.getLogger(__name__)


def spanning_tree_count(graph: GraphLike) -> int:
    """
    Exact number of spanning trees; 0 when the graph is disconnected.
    Uses a fraction-free (Bareiss) determinant of the Laplacian minor.
    """
    g = to_networkx(graph)
    n_points = g.number_of_nodes()
    if n_points == 0 or not nx.is_connected(g):
        return 0
    if n_points == 1:
        return 1
    laplacian = nx.laplacian_matrix(g, nodelist=range(n_points)).toarray()
    minor = Matrix(laplacian[1:, 1:].tolist())
    return int(minor.det(method="bareiss"))


def degree_product(graph: GraphLike) -> int:
    """Product of vertex degrees; an upper bound on the spanning-tree count."""
    g = to_networkx(graph)
    return prod(d for _, d in g.degree())
