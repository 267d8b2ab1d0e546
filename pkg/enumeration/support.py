"""
enumeration/support.py

Support of a crossing-free graph: the number of triangulations containing it.

Summing 1/supp(G) over every pair (T, G) with G a subgraph of T counts each
crossing-free graph exactly once, so the sum equals pg(S). The check below
evaluates that sum in exact rationals, one triangulation at a time: the
subgraphs of T are indexed by local bitmasks, every triangulation T' drops
its intersection with T into a table, and a superset-sum transform turns the
table into supp(G) for all G inside T at once.
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

import config
from bounds.catalan import catalan_table, doubling_holds
from bounds.theorems import hull_ratio
from enumeration.plane_graphs import PlaneGraph, SegmentTable, edge_count_histogram, iter_plane_graph_masks, to_networkx
from enumeration.spanning_trees import spanning_tree_count
from enumeration.triangulations import enumerate_triangulations
from flippability.decomposition import greedy_ps_flippable
from geometry.pointset import EdgeKey, PointSet
from stem.exceptions import IdentityViolation, InstanceTooLarge
from triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)


class SupportIndex:
    """All triangulations of a point set as segment bitmasks."""

    def __init__(
        self,
        ps: PointSet,
        cap: Optional[int] = None,
        parallel: bool = False,
        triangulations: Optional[List[Triangulation]] = None,
        table: Optional[SegmentTable] = None,
    ):
        self.ps = ps
        self.table = table or SegmentTable.build(ps)
        self.triangulations = triangulations if triangulations is not None else enumerate_triangulations(ps, cap, parallel)
        self.masks = [self.table.mask_of(t.edges) for t in self.triangulations]

    def __len__(self) -> int:
        return len(self.masks)

    def support(self, edges: Iterable[EdgeKey]) -> int:
        g = self.table.mask_of(edges)
        return sum(1 for m in self.masks if not g & ~m)

    def local_support_table(self, i: int) -> Tuple[List[int], np.ndarray]:
        """
        For triangulation i with k edges: its segment positions, and an array of
        length 2^k holding supp(G) for the subgraph G with each local mask.
        """
        tmask = self.masks[i]
        positions = [g for g in range(self.table.size) if tmask >> g & 1]
        k = len(positions)
        local = np.empty(len(self.masks), dtype=np.int64)
        for j, m in enumerate(self.masks):
            inter = m & tmask
            value = 0
            for bit, g in enumerate(positions):
                if inter >> g & 1:
                    value |= 1 << bit
            local[j] = value
        table = np.zeros(1 << k, dtype=np.int64)
        np.add.at(table, local, 1)
        for bit in range(k):
            view = table.reshape(-1, 2, 1 << bit)
            view[:, 0, :] += view[:, 1, :]
        return positions, table


def support(ps: PointSet, graph, cap: Optional[int] = None) -> int:
    """
    Number of triangulations containing every edge of `graph` (a PlaneGraph,
    Triangulation or edge iterable).

    Raises:
        InstanceTooLarge: if N exceeds the tri cap.
    """
    edges = graph.edges if isinstance(graph, (PlaneGraph, Triangulation)) else graph
    return SupportIndex(ps, cap).support(edges)


def _popcounts(k: int) -> np.ndarray:
    counts = np.zeros(1 << k, dtype=np.int64)
    for bit in range(k):
        counts[1 << bit: 2 << bit] = counts[: 1 << bit] + 1
    return counts


def support_identity_terms(
    ps: PointSet,
    pg_cap: Optional[int] = None,
    tri_cap: Optional[int] = None,
    parallel: bool = False,
) -> Tuple[Fraction, int, int]:
    """
    Returns (sum over T and G in T of 1/supp(G), pg, tri), checking
    supp(G) >= 2^|F \\ G| for the greedy ps-flippable set F of every T.

    Raises:
        InstanceTooLarge: if N exceeds the pg or tri cap.
        IdentityViolation: if some support falls below its doubling bound.
    """
    pg_cap = config.CAPS.pg if pg_cap is None else pg_cap
    if ps.N > pg_cap:
        raise InstanceTooLarge("pg", ps.N, pg_cap)
    index = SupportIndex(ps, tri_cap, parallel)
    pg = sum(edge_count_histogram(ps, pg_cap, parallel, table=index.table).values())

    total = Fraction(0)
    for i, tri in enumerate(index.triangulations):
        positions, supp = index.local_support_table(i)
        counts = np.bincount(supp)
        total += sum((Fraction(int(c), s) for s, c in enumerate(counts) if c and s), Fraction(0))

        flips, _ = greedy_ps_flippable(tri)
        bit_of = {g: bit for bit, g in enumerate(positions)}
        fmask = 0
        for e in flips:
            fmask |= 1 << bit_of[index.table.index[e]]
        k = len(positions)
        if fmask:
            missing = _popcounts(k)[np.bitwise_and(fmask, np.invert(np.arange(1 << k, dtype=np.int64)))]
            low = np.flatnonzero(supp < np.left_shift(np.int64(1), missing))
            if low.size:
                g = int(low[0])
                raise IdentityViolation(
                    "support doubling",
                    f"triangulation {i}: subgraph mask {g} has supp {int(supp[g])} < 2^{int(missing[g])}",
                )
    logger.info(f"support sum={total} pg={pg} tri={len(index)} on N={ps.N}")
    return total, pg, len(index)


def verify_support_identity(
    ps: PointSet,
    pg_cap: Optional[int] = None,
    tri_cap: Optional[int] = None,
    parallel: bool = False,
) -> bool:
    """
    Check the exact support sum equals pg(S), the support doubling bound,
    C_(i+1) >= 2^i, and pg(S) <= hull_ratio(N, h) * tri(S).

    Raises:
        IdentityViolation: naming the failed check.
    """
    total, pg, tri = support_identity_terms(ps, pg_cap, tri_cap, parallel)
    if total != pg:
        raise IdentityViolation("support sum", f"sum of 1/supp = {total} but pg = {pg}")
    if not doubling_holds(catalan_table(max(ps.N, 2))):
        raise IdentityViolation("catalan doubling", f"C_(i+1) < 2^i below i={ps.N}")
    if ps.h >= 3 and pg > hull_ratio(ps.N, ps.h) * tri:
        raise IdentityViolation("hull-ratio", f"pg={pg} exceeds ratio({ps.N},{ps.h}) * tri={tri}")
    return True


def spanning_tree_identity(ps: PointSet, pg_cap: Optional[int] = None, tri_cap: Optional[int] = None) -> Tuple[int, int]:
    """
    Sum of matrix-tree counts over all triangulations must equal the sum of
    supports over the distinct crossing-free spanning trees. Returns
    (number of crossing-free spanning trees, common sum).

    Raises:
        IdentityViolation: if the two sums differ.
    """
    pg_cap = config.CAPS.pg if pg_cap is None else pg_cap
    if ps.N > pg_cap:
        raise InstanceTooLarge("pg", ps.N, pg_cap)
    index = SupportIndex(ps, tri_cap)
    by_triangulation = sum(spanning_tree_count(t) for t in index.triangulations)
    trees = 0
    by_tree = 0
    for mask in iter_plane_graph_masks(index.table, min_edges=ps.N - 1, max_edges=ps.N - 1):
        if not nx.is_tree(to_networkx((ps.N, index.table.edges_of(mask)))):
            continue
        trees += 1
        by_tree += sum(1 for m in index.masks if not mask & ~m)
    if by_triangulation != by_tree:
        raise IdentityViolation("spanning tree support", f"sum st(T)={by_triangulation} but sum supp(tree)={by_tree}")
    return trees, by_tree
