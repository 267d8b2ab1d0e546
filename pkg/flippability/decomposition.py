"""
flippability/decomposition.py

Convex decompositions contained in a triangulation and the ps-flippable edge
sets they leave behind.

A FaceMap tracks bounded faces as counterclockwise vertex cycles. Removing an
interior edge merges its two faces; since both are already convex, only the two
corners at the edge's endpoints can turn reflex, so removability is two
orientation tests.
"""

import logging
from dataclasses import dataclass, field
from math import prod
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import config
from bounds.catalan import catalan
from geometry.pointset import EdgeKey, PointSet, edge_key
from geometry.predicates import cross
from stem.exceptions import IdentityViolation, InstanceTooLarge
from triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

Cycle = Tuple[int, ...]


class FaceMap:
    """Mutable working state for edge removal. Not shared across threads."""

    def __init__(self, owner: PointSet, cycles: Dict[int, List[int]], left: Dict[Tuple[int, int], int], next_id: int):
        self.owner = owner
        self.cycles = cycles
        self.left = left
        self._next_id = next_id

    @classmethod
    def from_triangulation(cls, tri: Triangulation) -> "FaceMap":
        cycles: Dict[int, List[int]] = {}
        left: Dict[Tuple[int, int], int] = {}
        for fid, face in enumerate(tri.faces):
            cycles[fid] = list(face)
            for i in range(3):
                left[(face[i], face[(i + 1) % 3])] = fid
        return cls(tri.owner, cycles, left, len(cycles))

    def copy(self) -> "FaceMap":
        return FaceMap(self.owner, {k: list(v) for k, v in self.cycles.items()}, dict(self.left), self._next_id)

    def is_interior(self, e: EdgeKey) -> bool:
        a, b = e
        return (a, b) in self.left and (b, a) in self.left

    def _merged(self, a: int, b: int) -> List[int]:
        f1 = self.cycles[self.left[(a, b)]]
        f2 = self.cycles[self.left[(b, a)]]
        i = f1.index(b)
        from_b = f1[i:] + f1[:i]          # b ... a
        j = f2.index(a)
        from_a = f2[j:] + f2[:j]          # a ... b
        return from_b + from_a[1:-1]

    def can_remove(self, e: EdgeKey) -> bool:
        """True iff e is interior and merging its faces keeps a convex face."""
        a, b = e
        if not self.is_interior(e):
            return False
        f1 = self.cycles[self.left[(a, b)]]
        f2 = self.cycles[self.left[(b, a)]]
        pts = self.owner.points
        ia, ib = f1.index(a), f1.index(b)
        ja, jb = f2.index(a), f2.index(b)
        prev_a = f1[ia - 1]
        next_a = f2[(ja + 1) % len(f2)]
        prev_b = f2[jb - 1]
        next_b = f1[(ib + 1) % len(f1)]
        return cross(pts[prev_a], pts[a], pts[next_a]) > 0 and cross(pts[prev_b], pts[b], pts[next_b]) > 0

    def remove(self, e: EdgeKey) -> None:
        a, b = e
        merged = self._merged(a, b)
        del self.cycles[self.left.pop((a, b))]
        del self.cycles[self.left.pop((b, a))]
        fid = self._next_id
        self._next_id += 1
        self.cycles[fid] = merged
        for i, u in enumerate(merged):
            self.left[(u, merged[(i + 1) % len(merged)])] = fid

    def edges(self) -> FrozenSet[EdgeKey]:
        return frozenset(edge_key(u, v) for u, v in self.left)

    def faces(self) -> Tuple[Cycle, ...]:
        def rotated(cycle: List[int]) -> Cycle:
            i = cycle.index(min(cycle))
            return tuple(cycle[i:] + cycle[:i])
        return tuple(sorted(rotated(c) for c in self.cycles.values()))


@dataclass(frozen=True)
class ConvexDecomposition:
    """
    A crossing-free subgraph of `source` whose bounded faces are all convex.
    `removed` is the ps-flippable set relative to the source triangulation.
    """
    owner: PointSet
    edges: FrozenSet[EdgeKey]
    faces: Tuple[Cycle, ...]
    removed: FrozenSet[EdgeKey]
    source: Optional[Triangulation] = field(default=None, compare=False, repr=False)
    removal_passes: Tuple[Tuple[EdgeKey, int], ...] = field(default=(), compare=False)

    @property
    def interior_edges(self) -> List[EdgeKey]:
        hull = self.owner.hull_edges()
        return sorted(e for e in self.edges if e not in hull)

    def neighbors(self, v: int) -> List[int]:
        return sorted({b if a == v else a for a, b in self.edges if v in (a, b)})

    def face_sizes(self) -> Dict[int, int]:
        sizes: Dict[int, int] = {}
        for face in self.faces:
            sizes[len(face)] = sizes.get(len(face), 0) + 1
        return dict(sorted(sizes.items()))


def _decomposition(tri: Triangulation, fm: FaceMap, log: Tuple[Tuple[EdgeKey, int], ...] = ()) -> ConvexDecomposition:
    edges = fm.edges()
    return ConvexDecomposition(
        owner=tri.owner,
        edges=edges,
        faces=fm.faces(),
        removed=tri.edges - edges,
        source=tri,
        removal_passes=log,
    )


def greedy_ps_flippable(tri: Triangulation) -> Tuple[Set[EdgeKey], ConvexDecomposition]:
    """
    Remove interior edges in lexicographic order, in repeated passes, while the
    merged face stays convex. Stops after a pass that removes nothing.
    """
    fm = FaceMap.from_triangulation(tri)
    log: List[Tuple[EdgeKey, int]] = []
    pass_no = 0
    while True:
        pass_no += 1
        removed_this_pass = 0
        for e in sorted(fm.edges()):
            if fm.can_remove(e):
                fm.remove(e)
                log.append((e, pass_no))
                removed_this_pass += 1
        if not removed_this_pass:
            break
    decomposition = _decomposition(tri, fm, tuple(log))
    logger.debug(f"Greedy removed {len(log)} edges in {pass_no} passes")
    return set(decomposition.removed), decomposition


def exact_max_ps_flippable(tri: Triangulation, cap: Optional[int] = None) -> Set[EdgeKey]:
    """
    Maximum ps-flippable set by depth-first search over interior edges in
    lexicographic order, each either removed (when removable) or kept.

    A kept or non-removable edge never becomes removable later, so the edges
    still removable bound what the branch can reach.

    Raises:
        InstanceTooLarge: if N exceeds the ps cap.
    """
    cap = config.CAPS.ps if cap is None else cap
    if tri.owner.N > cap:
        raise InstanceTooLarge("ps", tri.owner.N, cap)

    order = tri.interior_edges
    start = FaceMap.from_triangulation(tri)
    best: List[EdgeKey] = sorted(greedy_ps_flippable(tri)[0])
    explored = 0

    def search(fm: FaceMap, index: int, removed: List[EdgeKey]) -> None:
        nonlocal best, explored
        explored += 1
        remaining = [e for e in order[index:] if fm.can_remove(e)]
        if len(removed) + len(remaining) <= len(best):
            return
        if not remaining:
            return
        e = remaining[0]
        next_index = order.index(e) + 1
        branch = fm.copy()
        branch.remove(e)
        removed.append(e)
        if len(removed) > len(best):
            best = list(removed)
        search(branch, next_index, removed)
        removed.pop()
        search(fm, next_index, removed)

    search(start, 0, [])
    logger.debug(f"Exact ps search explored {explored} nodes, best {len(best)}")
    return set(best)


def completion_count(decomposition: ConvexDecomposition) -> int:
    """Number of triangulations containing the decomposition: product of C(k-2)."""
    return prod(catalan(len(face) - 2) for face in decomposition.faces)


def check_decomposition(decomposition: ConvexDecomposition) -> None:
    """
    Raises:
        IdentityViolation: if a face is not strictly convex, a hull edge is
            missing, or a vertex is isolated.
    """
    ps = decomposition.owner
    pts = ps.points
    if not ps.hull_edges() <= decomposition.edges:
        raise IdentityViolation("hull edges", "decomposition is missing a hull edge")
    for face in decomposition.faces:
        k = len(face)
        for i in range(k):
            if cross(pts[face[i - 1]], pts[face[i]], pts[face[(i + 1) % k]]) <= 0:
                raise IdentityViolation("convex faces", f"face {face} has a reflex corner at {face[i]}")
    touched = {v for e in decomposition.edges for v in e}
    if len(touched) != ps.N:
        raise IdentityViolation("no isolated vertex", f"isolated vertices {sorted(set(range(ps.N)) - touched)}")
    if decomposition.source is not None and decomposition.edges | decomposition.removed != decomposition.source.edges:
        raise IdentityViolation("edge partition", "edges and removed do not cover the source triangulation")
