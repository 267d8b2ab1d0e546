"""
triangulation/triangulation.py

Immutable triangulations of a PointSet with edge flips.

Faces are stored through an apex map: `_apex[(u, v)] = w` means (u, v, w) is a
counterclockwise bounded face. An interior edge has both directions in the map,
a hull edge only the direction that runs counterclockwise around the hull.
"""

import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from geometry.pointset import EdgeKey, PointSet, edge_key
from geometry.predicates import cross, segments_cross
from stem.exceptions import EdgeNotInTriangulation, IdentityViolation, NotFlippable, SizeError

logger = logging.getLogger(__name__)

Face = Tuple[int, int, int]
CanonicalKey = Tuple[EdgeKey, ...]


def _ccw(ps: PointSet, face: Sequence[int]) -> Face:
    a, b, c = face
    if cross(ps.points[a], ps.points[b], ps.points[c]) < 0:
        return (a, c, b)
    return (a, b, c)


class Triangulation:
    """
    A maximal crossing-free graph over `owner`. Flips return new values.
    """

    __slots__ = ("owner", "_edges", "_apex", "_adjacency")

    def __init__(self, owner: PointSet, edges: FrozenSet[EdgeKey], apex: Dict[Tuple[int, int], int]):
        self.owner = owner
        self._edges = edges
        self._apex = apex
        self._adjacency: Optional[Dict[int, FrozenSet[int]]] = None

    # --- Construction ---

    @classmethod
    def from_faces(cls, ps: PointSet, faces: Iterable[Sequence[int]]) -> "Triangulation":
        apex: Dict[Tuple[int, int], int] = {}
        edges = set()
        for face in faces:
            a, b, c = _ccw(ps, face)
            for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
                if (u, v) in apex:
                    raise IdentityViolation("face incidence", f"directed edge {(u, v)} used by two faces")
                apex[(u, v)] = w
                edges.add(edge_key(u, v))
        expected_edges = 3 * ps.n + 2 * ps.h - 3
        if len(edges) != expected_edges:
            raise IdentityViolation("edge count", f"{len(edges)} edges, expected {expected_edges}")
        return cls(ps, frozenset(edges), apex)

    @classmethod
    def from_edges(cls, ps: PointSet, edges: Iterable[Sequence[int]]) -> "Triangulation":
        """Rebuild from an edge list; faces are the edge triangles with no point inside."""
        keys = {edge_key(int(u), int(v)) for u, v in edges}
        adjacency: Dict[int, set] = {v: set() for v in range(ps.N)}
        for u, v in keys:
            adjacency[u].add(v)
            adjacency[v].add(u)
        pts = ps.points
        faces: List[Face] = []
        for u, v in sorted(keys):
            for w in sorted(adjacency[u] & adjacency[v]):
                if w <= v:
                    continue
                a, b, c = _ccw(ps, (u, v, w))
                empty = all(
                    not (cross(pts[a], pts[b], pts[x]) > 0
                         and cross(pts[b], pts[c], pts[x]) > 0
                         and cross(pts[c], pts[a], pts[x]) > 0)
                    for x in range(ps.N) if x not in (a, b, c)
                )
                if empty:
                    faces.append((a, b, c))
        tri = cls.from_faces(ps, faces)
        if tri.edges != frozenset(keys):
            raise IdentityViolation("edge list", "edges do not form a triangulation")
        return tri

    # --- Structure ---

    @property
    def edges(self) -> FrozenSet[EdgeKey]:
        return self._edges

    @property
    def faces(self) -> List[Face]:
        return sorted(
            (u, v, w) for (u, v), w in self._apex.items() if u < v and u < w
        )

    def apex(self, u: int, v: int) -> Optional[int]:
        """Third vertex of the face left of u -> v, or None past the hull."""
        return self._apex.get((u, v))

    def is_interior_edge(self, e: EdgeKey) -> bool:
        a, b = e
        return (a, b) in self._apex and (b, a) in self._apex

    @property
    def interior_edges(self) -> List[EdgeKey]:
        return sorted(e for e in self._edges if self.is_interior_edge(e))

    @property
    def hull_edges(self) -> List[EdgeKey]:
        return sorted(e for e in self._edges if not self.is_interior_edge(e))

    def neighbors(self, v: int) -> FrozenSet[int]:
        if self._adjacency is None:
            adjacency: Dict[int, set] = {x: set() for x in range(self.owner.N)}
            for a, b in self._edges:
                adjacency[a].add(b)
                adjacency[b].add(a)
            self._adjacency = {x: frozenset(s) for x, s in adjacency.items()}
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def __contains__(self, e) -> bool:
        return edge_key(*e) in self._edges

    # --- Flips ---

    def _quad(self, e: EdgeKey) -> Optional[Tuple[int, int, int, int]]:
        a, b = edge_key(*e)
        if (a, b) not in self._edges:
            raise EdgeNotInTriangulation((a, b))
        c = self._apex.get((a, b))
        d = self._apex.get((b, a))
        if c is None or d is None:
            return None
        return a, b, c, d

    def is_flippable(self, e: EdgeKey) -> bool:
        quad = self._quad(e)
        if quad is None:
            return False
        a, b, c, d = quad
        pts = self.owner.points
        # quadrilateral a, d, b, c is counterclockwise; check the two corners at c and d
        return cross(pts[d], pts[b], pts[c]) > 0 and cross(pts[c], pts[a], pts[d]) > 0

    def flip(self, e: EdgeKey) -> "Triangulation":
        if not self.is_flippable(e):
            raise NotFlippable(edge_key(*e))
        a, b, c, d = self._quad(e)
        apex = dict(self._apex)
        for key in ((a, b), (b, c), (c, a), (b, a), (a, d), (d, b)):
            del apex[key]
        apex[(c, a)] = d
        apex[(a, d)] = c
        apex[(d, c)] = a
        apex[(d, b)] = c
        apex[(b, c)] = d
        apex[(c, d)] = b
        edges = (self._edges - {(a, b)}) | {edge_key(c, d)}
        return Triangulation(self.owner, edges, apex)

    def flipped_edge(self, e: EdgeKey) -> EdgeKey:
        """The diagonal that replaces e after a flip."""
        quad = self._quad(e)
        if quad is None:
            raise NotFlippable(edge_key(*e))
        return edge_key(quad[2], quad[3])

    # --- Identity ---

    def canonical_key(self) -> CanonicalKey:
        return tuple(sorted(self._edges))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self.owner == other.owner and self._edges == other._edges

    def __hash__(self) -> int:
        return hash(self._edges)

    def __repr__(self) -> str:
        return f"Triangulation(N={self.owner.N}, edges={len(self._edges)})"


def build_initial(ps: PointSet) -> Triangulation:
    """
    Fan from the first hull vertex, then insert interior points in input order,
    splitting the triangle that contains each one.
    """
    if ps.N < 3:
        raise SizeError(f"a triangulation needs at least 3 points, got {ps.N}")
    hull = ps.hull
    faces: List[Face] = [(hull[0], hull[i], hull[i + 1]) for i in range(1, len(hull) - 1)]
    pts = ps.points
    for p in ps.interior_vertices():
        for idx, (a, b, c) in enumerate(faces):
            if (cross(pts[a], pts[b], pts[p]) > 0
                    and cross(pts[b], pts[c], pts[p]) > 0
                    and cross(pts[c], pts[a], pts[p]) > 0):
                faces[idx] = (a, b, p)
                faces.extend([(b, c, p), (c, a, p)])
                break
        else:
            raise IdentityViolation("point location", f"interior point {p} lies in no face")
    tri = Triangulation.from_faces(ps, faces)
    logger.debug(f"Built initial triangulation with {len(tri.edges)} edges")
    return tri


def canonical_key(tri: Triangulation) -> CanonicalKey:
    return tri.canonical_key()


def check_invariants(tri: Triangulation) -> None:
    """
    Assert every structural invariant, including brute-force non-crossing.

    Raises:
        IdentityViolation: naming the first invariant that fails.
    """
    ps = tri.owner
    pts = ps.points
    if len(tri.edges) != 3 * ps.n + 2 * ps.h - 3:
        raise IdentityViolation("edge count", f"{len(tri.edges)} != 3n + 2h - 3")
    faces = tri.faces
    if len(faces) != 2 * ps.n + ps.h - 2:
        raise IdentityViolation("face count", f"{len(faces)} != 2n + h - 2")
    for a, b, c in faces:
        if cross(pts[a], pts[b], pts[c]) <= 0:
            raise IdentityViolation("face orientation", f"face {(a, b, c)} is not counterclockwise")
    hull_edges = ps.hull_edges()
    for e in tri.edges:
        a, b = e
        sides = ((a, b) in tri._apex) + ((b, a) in tri._apex)
        expected = 1 if e in hull_edges else 2
        if sides != expected:
            raise IdentityViolation("edge incidence", f"edge {e} borders {sides} faces, expected {expected}")
    for (a, b), (c, d) in combinations(sorted(tri.edges), 2):
        if segments_cross(pts[a], pts[b], pts[c], pts[d]):
            raise IdentityViolation("non-crossing", f"edges {(a, b)} and {(c, d)} cross")


# --- Serialization ---

def triangulation_to_dict(tri: Triangulation) -> dict:
    return {"n_points": tri.owner.N, "edges": [list(e) for e in tri.canonical_key()]}


def triangulation_from_dict(ps: PointSet, data: dict) -> Triangulation:
    if data.get("n_points") != ps.N:
        raise IdentityViolation("n_points", f"serialized N={data.get('n_points')} but point set has {ps.N}")
    return Triangulation.from_edges(ps, data["edges"])
