"""
geometry/pointset.py

Labeled point sets in general position.
A PointSet is only ever produced by `validate`, so every instance in the
program is known to have distinct points, no collinear triple and a
counterclockwise hull.
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import FrozenSet, Iterable, List, NamedTuple, Sequence, TextIO, Tuple, Union

from geometry.predicates import cross
from stem.exceptions import CollinearTriple, CoordinateOverflow, DuplicatePoint, PointFileError

logger = logging.getLogger(__name__)

COORD_MIN = -(2 ** 62)
COORD_MAX = 2 ** 62 - 1

EdgeKey = Tuple[int, int]


class Point(NamedTuple):
    x: int
    y: int


def edge_key(u: int, v: int) -> EdgeKey:
    """Normalize an undirected edge so that a < b."""
    if u == v:
        raise ValueError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PointSet:
    """
    Immutable labeled point set. VertexId is the index into `points`.
    """
    points: Tuple[Point, ...]
    hull: Tuple[int, ...]
    _hull_set: FrozenSet[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hull_set", frozenset(self.hull))

    @property
    def N(self) -> int:
        return len(self.points)

    @property
    def h(self) -> int:
        return len(self.hull)

    @property
    def n(self) -> int:
        return self.N - self.h

    def on_hull(self, v: int) -> bool:
        return v in self._hull_set

    def hull_edges(self) -> FrozenSet[EdgeKey]:
        k = len(self.hull)
        return frozenset(edge_key(self.hull[i], self.hull[(i + 1) % k]) for i in range(k))

    def interior_vertices(self) -> List[int]:
        return [v for v in range(self.N) if v not in self._hull_set]

    def __len__(self) -> int:
        return len(self.points)


def _monotone_chain(points: Sequence[Point]) -> Tuple[int, ...]:
    order = sorted(range(len(points)), key=lambda i: points[i])
    if len(order) < 3:
        return tuple(order)

    def half(seq: Iterable[int]) -> List[int]:
        chain: List[int] = []
        for i in seq:
            while len(chain) >= 2 and cross(points[chain[-2]], points[chain[-1]], points[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    return tuple(lower[:-1] + upper[:-1])


def _find_collinear(points: Sequence[Point]) -> Tuple[int, int, int] | None:
    # Two partners of i in the same reduced direction are collinear with it.
    for i, (xi, yi) in enumerate(points):
        seen: dict[Tuple[int, int], int] = {}
        for j in range(i + 1, len(points)):
            dx, dy = points[j].x - xi, points[j].y - yi
            g = gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            if (dx, dy) in seen:
                return (i, seen[(dx, dy)], j)
            seen[(dx, dy)] = j
    return None


def validate(raw: Iterable[Sequence[int]]) -> PointSet:
    """
    Build a PointSet, rejecting duplicates, collinear triples and oversized coordinates.

    Raises:
        DuplicatePoint, CollinearTriple, CoordinateOverflow
    """
    points: List[Point] = []
    for idx, item in enumerate(raw):
        x, y = item
        if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
            raise CoordinateOverflow(f"point {idx} has non-integer coordinates ({x!r}, {y!r})")
        if not (COORD_MIN <= x <= COORD_MAX and COORD_MIN <= y <= COORD_MAX):
            raise CoordinateOverflow(f"point {idx} = ({x}, {y}) does not fit in 63 signed bits")
        points.append(Point(x, y))

    first_seen: dict[Point, int] = {}
    for idx, p in enumerate(points):
        if p in first_seen:
            raise DuplicatePoint(first_seen[p], idx)
        first_seen[p] = idx

    triple = _find_collinear(points)
    if triple is not None:
        raise CollinearTriple(*sorted(triple))

    ps = PointSet(points=tuple(points), hull=_monotone_chain(points))
    logger.debug(f"Validated point set N={ps.N} h={ps.h} n={ps.n}")
    return ps


def convex_hull(ps: PointSet) -> List[int]:
    """Hull vertex ids in counterclockwise order."""
    return list(ps.hull)


# --- Point files ---

def parse_points(text: str, source: str = "<string>") -> PointSet:
    """Parse "x y" lines; blank lines and lines starting with '#' are skipped."""
    raw: List[Tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise PointFileError(f"{source}:{lineno}: expected 'x y', got {stripped!r}")
        try:
            raw.append((int(parts[0], 10), int(parts[1], 10)))
        except ValueError:
            raise PointFileError(f"{source}:{lineno}: coordinates must be base-10 integers") from None
    return validate(raw)


def read_point_file(path: Union[str, Path]) -> PointSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise PointFileError(f"cannot read {path}: {e}") from e
    ps = parse_points(text, source=str(path))
    logger.info(f"Read {ps.N} points from {path}")
    return ps


def format_points(ps: PointSet) -> str:
    return "".join(f"{p.x} {p.y}\n" for p in ps.points)


def write_point_file(ps: PointSet, target: Union[str, Path, TextIO]) -> None:
    text = format_points(ps)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {ps.N} points to {target}")
    else:
        target.write(text)
