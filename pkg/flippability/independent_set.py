"""
flippability/independent_set.py

Exact maximum independent set by branch and bound.
Branches on a maximum-degree vertex and prunes with a greedy clique cover,
which bounds how many vertices any independent set can still take.
"""

import logging
from typing import Dict, FrozenSet, Hashable, List, Set

import networkx as nx

logger = logging.getLogger(__name__)


def _clique_cover_size(candidates: FrozenSet[Hashable], adjacency: Dict[Hashable, Set[Hashable]]) -> int:
    cliques: List[List[Hashable]] = []
    for v in sorted(candidates):
        for clique in cliques:
            if all(u in adjacency[v] for u in clique):
                clique.append(v)
                break
        else:
            cliques.append([v])
    return len(cliques)


def greedy_independent_set(graph: nx.Graph) -> Set[Hashable]:
    """Minimum-degree greedy; deterministic on sortable node labels."""
    adjacency = {v: set(graph.adj[v]) for v in graph.nodes}
    remaining = set(adjacency)
    chosen: Set[Hashable] = set()
    while remaining:
        v = min(remaining, key=lambda x: (len(adjacency[x] & remaining), x))
        chosen.add(v)
        remaining -= adjacency[v] | {v}
    return chosen


def maximum_independent_set(graph: nx.Graph) -> Set[Hashable]:
    """
    Return one maximum-cardinality independent set of `graph`.
    Ties are broken deterministically for sortable node labels.
    """
    adjacency: Dict[Hashable, Set[Hashable]] = {v: set(graph.adj[v]) for v in graph.nodes}
    best: List[Hashable] = sorted(greedy_independent_set(graph))
    nodes_explored = 0

    def search(candidates: FrozenSet[Hashable], chosen: List[Hashable]) -> None:
        nonlocal best, nodes_explored
        nodes_explored += 1
        if not candidates:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + _clique_cover_size(candidates, adjacency) <= len(best):
            return
        v = max(sorted(candidates), key=lambda x: len(adjacency[x] & candidates))
        if not adjacency[v] & candidates:
            # all remaining vertices are isolated
            total = chosen + sorted(candidates)
            if len(total) > len(best):
                best = total
            return
        search(candidates - adjacency[v] - {v}, chosen + [v])
        search(candidates - {v}, chosen)

    search(frozenset(adjacency), [])
    logger.debug(f"MIS search explored {nodes_explored} nodes, size {len(best)}")
    return set(best)
