"""
enumeration/triangulations.py

All triangulations of a point set by breadth-first search of the flip graph,
which is connected. Duplicates are dropped by canonical key.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional, Set

import config
from flippability.flippable import flippable_set
from geometry.pointset import PointSet
from stem.exceptions import InstanceTooLarge
from triangulation.triangulation import CanonicalKey, Triangulation, build_initial

logger = logging.getLogger(__name__)


def _check_cap(ps: PointSet, cap: Optional[int]) -> None:
    cap = config.CAPS.tri if cap is None else cap
    if ps.N > cap:
        raise InstanceTooLarge("tri", ps.N, cap)


def flip_neighbors(tri: Triangulation) -> List[Triangulation]:
    """Triangulations one flip away, in lexicographic order of the flipped edge."""
    return [tri.flip(e) for e in sorted(flippable_set(tri))]


def iter_triangulations(ps: PointSet, cap: Optional[int] = None) -> Iterator[Triangulation]:
    """
    Yield every triangulation of ps exactly once, in BFS order from build_initial.

    Raises:
        InstanceTooLarge: if N exceeds the tri cap.
    """
    _check_cap(ps, cap)
    start = build_initial(ps)
    seen: Set[CanonicalKey] = {start.canonical_key()}
    frontier = [start]
    while frontier:
        next_frontier: List[Triangulation] = []
        for tri in frontier:
            yield tri
            for neighbor in flip_neighbors(tri):
                key = neighbor.canonical_key()
                if key not in seen:
                    seen.add(key)
                    next_frontier.append(neighbor)
        frontier = next_frontier


def _iter_parallel(ps: PointSet) -> Iterator[Triangulation]:
    # Level-synchronous: workers expand a level, the main process dedups in frontier order.
    start = build_initial(ps)
    seen: Set[CanonicalKey] = {start.canonical_key()}
    frontier = [start]
    kwargs = {"max_workers": config.WORKERS} if config.WORKERS > 0 else {}
    with ProcessPoolExecutor(**kwargs) as executor:
        while frontier:
            expanded = list(executor.map(flip_neighbors, frontier, chunksize=max(1, len(frontier) // 64)))
            next_frontier: List[Triangulation] = []
            for tri, neighbors in zip(frontier, expanded):
                yield tri
                for neighbor in neighbors:
                    key = neighbor.canonical_key()
                    if key not in seen:
                        seen.add(key)
                        next_frontier.append(neighbor)
            frontier = next_frontier


def enumerate_triangulations(
    ps: PointSet,
    cap: Optional[int] = None,
    parallel: bool = False,
) -> List[Triangulation]:
    """
    Every triangulation of ps; len() of the result is tri(S). Parallel mode
    yields the same list in the same order.

    Raises:
        InstanceTooLarge: if N exceeds the tri cap.
    """
    _check_cap(ps, cap)
    if parallel:
        result = list(_iter_parallel(ps))
    else:
        result = list(iter_triangulations(ps, cap))
    logger.info(f"tri(S)={len(result)} on N={ps.N}")
    return result


def count_triangulations(ps: PointSet, cap: Optional[int] = None, parallel: bool = False) -> int:
    return len(enumerate_triangulations(ps, cap, parallel))
