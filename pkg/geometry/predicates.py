"""
geometry/predicates.py

Exact orientation predicates on integer points.
Nothing here touches floating point; every decision is the sign of an integer
determinant.
"""

from enum import IntEnum
from functools import cmp_to_key
from typing import Iterable, List, Sequence, Tuple

Coord = Tuple[int, int]


class Orientation(IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def cross(p: Coord, q: Coord, r: Coord) -> int:
    """Twice the signed area of (p, q, r): det(q - p, r - p)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p: Coord, q: Coord, r: Coord) -> Orientation:
    d = cross(p, q, r)
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def segments_cross(p1: Coord, p2: Coord, q1: Coord, q2: Coord) -> bool:
    """
    True iff the open segments p1p2 and q1q2 meet in a single interior point.
    Segments sharing an endpoint never cross; input is in general position.
    """
    if p1 == q1 or p1 == q2 or p2 == q1 or p2 == q2:
        return False
    d1 = cross(p1, p2, q1)
    d2 = cross(p1, p2, q2)
    d3 = cross(q1, q2, p1)
    d4 = cross(q1, q2, p2)
    return d1 * d2 < 0 and d3 * d4 < 0


def _half(dx: int, dy: int) -> int:
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def ccw_neighbor_order(points: Sequence[Coord], p: int, neighbors: Iterable[int]) -> List[int]:
    """
    Sort neighbor ids of p counterclockwise by direction, starting from the
    positive x axis. Exact: half-plane split plus cross products.
    """
    px, py = points[p]

    def compare(a: int, b: int) -> int:
        ax, ay = points[a][0] - px, points[a][1] - py
        bx, by = points[b][0] - px, points[b][1] - py
        ha, hb = _half(ax, ay), _half(bx, by)
        if ha != hb:
            return ha - hb
        c = ax * by - ay * bx
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(neighbors, key=cmp_to_key(compare))
