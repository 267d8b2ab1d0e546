"""
flippability/flippable.py

Flippable and simultaneously flippable edges of a triangulation.
Two flippable edges conflict when some triangle is incident to both; a
simultaneously flippable set is an independent set of the conflict graph.
"""

import logging
from itertools import combinations
from typing import Iterable, Optional, Set, Tuple

import networkx as nx

import config
from flippability.independent_set import greedy_independent_set, maximum_independent_set
from geometry.pointset import EdgeKey, edge_key
from stem.exceptions import InstanceTooLarge
from triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)


def flippable_set(tri: Triangulation) -> Set[EdgeKey]:
    return {e for e in tri.interior_edges if tri.is_flippable(e)}


def conflict_graph(tri: Triangulation) -> nx.Graph:
    """Flippable edges as nodes, joined when they bound a common triangle."""
    flippable = flippable_set(tri)
    graph = nx.Graph()
    graph.add_nodes_from(sorted(flippable))
    for a, b, c in tri.faces:
        sides = [e for e in (edge_key(a, b), edge_key(b, c), edge_key(c, a)) if e in flippable]
        graph.add_edges_from(combinations(sides, 2))
    return graph


def is_simultaneously_flippable(tri: Triangulation, edges: Iterable[EdgeKey]) -> bool:
    chosen = {edge_key(*e) for e in edges}
    if not chosen <= flippable_set(tri):
        return False
    graph = conflict_graph(tri)
    return not any(graph.has_edge(u, v) for u, v in combinations(sorted(chosen), 2))


def max_simultaneously_flippable(tri: Triangulation, cap: Optional[int] = None) -> Set[EdgeKey]:
    """
    Exact maximum simultaneously flippable set.

    Raises:
        InstanceTooLarge: if N exceeds the MIS cap.
    """
    cap = config.CAPS.mis if cap is None else cap
    if tri.owner.N > cap:
        raise InstanceTooLarge("mis", tri.owner.N, cap)
    chosen = maximum_independent_set(conflict_graph(tri))
    logger.debug(f"flip_s = {len(chosen)} on N={tri.owner.N}")
    return chosen


def greedy_simultaneously_flippable(tri: Triangulation) -> Set[EdgeKey]:
    """Maximal, not necessarily maximum, simultaneously flippable set."""
    return greedy_independent_set(conflict_graph(tri))


def simultaneously_flippable(tri: Triangulation, cap: Optional[int] = None) -> Tuple[Set[EdgeKey], bool]:
    """Exact set within the cap, greedy above it. Returns (edges, exact)."""
    try:
        return max_simultaneously_flippable(tri, cap), True
    except InstanceTooLarge as e:
        logger.warning(f"{e}; falling back to greedy simultaneous flips")
        return greedy_simultaneously_flippable(tri), False
