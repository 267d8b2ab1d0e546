"""
enumeration/plane_graphs.py

Exact counting of crossing-free straight-edge graphs.

Every segment between two points gets a bit in lexicographic order. A graph is
a bitmask; it is crossing-free iff no chosen segment's crossing mask meets the
others. Counting branches on the lowest still-available segment (take it and
drop everything it crosses, or leave it) and memoizes on the available mask.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

import config
from enumeration.triangulations import count_triangulations
from geometry.pointset import EdgeKey, PointSet, edge_key
from geometry.predicates import ccw_neighbor_order, segments_cross
from stem.exceptions import InstanceTooLarge
from stem.models import CountReport, ForestCounts
from triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

Poly = Tuple[int, ...]


# --- Segment table ---

@dataclass(frozen=True)
class SegmentTable:
    """All N(N-1)/2 segments of a point set with their pairwise crossings."""
    n_points: int
    segments: Tuple[EdgeKey, ...]
    crossings: Tuple[int, ...]
    hull_mask: int
    index: Dict[EdgeKey, int] = field(compare=False, repr=False)

    @classmethod
    def build(cls, ps: PointSet) -> "SegmentTable":
        segments = tuple(combinations(range(ps.N), 2))
        index = {s: i for i, s in enumerate(segments)}
        pts = ps.points
        crossings = [0] * len(segments)
        for i, j in combinations(range(len(segments)), 2):
            (a, b), (c, d) = segments[i], segments[j]
            if segments_cross(pts[a], pts[b], pts[c], pts[d]):
                crossings[i] |= 1 << j
                crossings[j] |= 1 << i
        hull_mask = 0
        for e in ps.hull_edges():
            hull_mask |= 1 << index[e]
        logger.debug(f"Segment table: {len(segments)} segments, "
                     f"{sum(bin(c).count('1') for c in crossings) // 2} crossing pairs")
        return cls(ps.N, segments, tuple(crossings), hull_mask, index)

    @property
    def size(self) -> int:
        return len(self.segments)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.segments)) - 1

    def mask_of(self, edges) -> int:
        mask = 0
        for e in edges:
            mask |= 1 << self.index[edge_key(*e)]
        return mask

    def edges_of(self, mask: int) -> FrozenSet[EdgeKey]:
        return frozenset(s for i, s in enumerate(self.segments) if mask >> i & 1)

    def is_crossing_free(self, mask: int) -> bool:
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if self.crossings[i] & mask:
                return False
            rest ^= low
        return True


@dataclass(frozen=True)
class PlaneGraph:
    owner: PointSet
    edges: FrozenSet[EdgeKey]

    @classmethod
    def from_mask(cls, ps: PointSet, table: SegmentTable, mask: int) -> "PlaneGraph":
        return cls(ps, table.edges_of(mask))


GraphLike = Union[Triangulation, PlaneGraph, Tuple[int, Iterable[EdgeKey]]]


def to_networkx(graph: GraphLike) -> nx.Graph:
    """Triangulation, PlaneGraph or (n_points, edges) as a networkx graph on 0..N-1."""
    if isinstance(graph, (Triangulation, PlaneGraph)):
        n_points, edges = graph.owner.N, graph.edges
    else:
        n_points, edges = graph
    g = nx.Graph()
    g.add_nodes_from(range(n_points))
    g.add_edges_from(edges)
    return g


def _check_cap(ps: PointSet, cap: Optional[int], kind: str = "pg") -> None:
    cap = config.CAPS.pg if cap is None else cap
    if ps.N > cap:
        raise InstanceTooLarge(kind, ps.N, cap)


# --- Polynomials in the edge count ---

def _poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _poly_shift(a: Poly, by: int = 1) -> Poly:
    return (0,) * by + a


def _poly_to_dict(p: Poly) -> Dict[int, int]:
    return {m: c for m, c in enumerate(p) if c}


# --- Edge-count histogram ---

class _HistogramCounter:
    def __init__(self, table: SegmentTable):
        self.crossings = table.crossings
        self.memo: Dict[int, Poly] = {0: (1,)}

    def count(self, mask: int) -> Poly:
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        result = _poly_add(self.count(rest), _poly_shift(self.count(rest & ~self.crossings[i])))
        self.memo[mask] = result
        return result


def _histogram_task(args: Tuple[SegmentTable, int, int]) -> Poly:
    table, available, chosen_count = args
    return _poly_shift(_HistogramCounter(table).count(available), chosen_count)


# --- Forests ---

def _relabel(labels: Sequence[int]) -> Tuple[int, ...]:
    seen: Dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


class _ForestCounter:
    """Counts cycle-free crossing-free graphs by edge count."""

    def __init__(self, table: SegmentTable):
        self.table = table
        self.memo: Dict[Tuple[int, int, Tuple[int, ...]], Poly] = {}

    def count(self, i: int, available: int, labels: Tuple[int, ...]) -> Poly:
        rest = available >> i
        if rest == 0:
            return (1,)
        i += (rest & -rest).bit_length() - 1
        key = (i, available, labels)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        bit = 1 << i
        result = self.count(i + 1, available & ~bit, labels)
        a, b = self.table.segments[i]
        if labels[a] != labels[b]:
            old, new = labels[b], labels[a]
            merged = _relabel([new if x == old else x for x in labels])
            result = _poly_add(result, _poly_shift(
                self.count(i + 1, available & ~bit & ~self.table.crossings[i], merged)))
        self.memo[key] = result
        return result


def _forest_task(args: Tuple[SegmentTable, int, int, Tuple[int, ...], int]) -> Poly:
    table, start, available, labels, chosen_count = args
    return _poly_shift(_ForestCounter(table).count(start, available, labels), chosen_count)


# --- Parallel prefix split ---

def _prefixes(table: SegmentTable, depth: int, forests: bool) -> List[Tuple[int, int, Tuple[int, ...]]]:
    """Feasible decisions on the first `depth` segments: (available, chosen count, labels)."""
    depth = min(depth, table.size)
    states = [(table.full_mask, 0, tuple(range(table.n_points)))]
    for i in range(depth):
        bit = 1 << i
        nxt = []
        for available, chosen, labels in states:
            if not available & bit:
                nxt.append((available, chosen, labels))
                continue
            a, b = table.segments[i]
            nxt.append((available & ~bit, chosen, labels))
            if not forests:
                nxt.append((available & ~bit & ~table.crossings[i], chosen + 1, labels))
            elif labels[a] != labels[b]:
                old, new = labels[b], labels[a]
                merged = _relabel([new if x == old else x for x in labels])
                nxt.append((available & ~bit & ~table.crossings[i], chosen + 1, merged))
        states = nxt
    return states


def _sum_polys(polys) -> Poly:
    total: Poly = (0,)
    for p in polys:
        total = _poly_add(total, p)
    return total


def _executor_kwargs() -> dict:
    return {"max_workers": config.WORKERS} if config.WORKERS > 0 else {}


def edge_count_histogram(
    ps: PointSet,
    cap: Optional[int] = None,
    parallel: bool = False,
    table: Optional[SegmentTable] = None,
) -> Dict[int, int]:
    """
    m -> number of crossing-free graphs with exactly m edges (the empty graph
    included).

    Raises:
        InstanceTooLarge: if N exceeds the pg cap.
    """
    _check_cap(ps, cap)
    table = table or SegmentTable.build(ps)
    if parallel and table.size > config.SPLIT_DEPTH:
        tasks = [(table, available, chosen) for available, chosen, _ in _prefixes(table, config.SPLIT_DEPTH, False)]
        with ProcessPoolExecutor(**_executor_kwargs()) as executor:
            poly = _sum_polys(executor.map(_histogram_task, tasks))
    else:
        poly = _HistogramCounter(table).count(table.full_mask)
    histogram = _poly_to_dict(poly)
    logger.info(f"pg(S)={sum(histogram.values())} on N={ps.N}")
    return histogram


def forest_counts(
    ps: PointSet,
    cap: Optional[int] = None,
    parallel: bool = False,
    table: Optional[SegmentTable] = None,
) -> ForestCounts:
    """
    Crossing-free forests by number of components. A k-forest has N - k edges.

    Raises:
        InstanceTooLarge: if N exceeds the pg cap.
    """
    _check_cap(ps, cap)
    table = table or SegmentTable.build(ps)
    labels = tuple(range(ps.N))
    if parallel and table.size > config.SPLIT_DEPTH:
        depth = config.SPLIT_DEPTH
        tasks = [(table, depth, available, lab, chosen)
                 for available, chosen, lab in _prefixes(table, depth, True)]
        with ProcessPoolExecutor(**_executor_kwargs()) as executor:
            poly = _sum_polys(executor.map(_forest_task, tasks))
    else:
        poly = _ForestCounter(table).count(0, table.full_mask, labels)
    by_k = {ps.N - m: c for m, c in enumerate(poly) if c}
    counts = ForestCounts(total=sum(by_k.values()), by_k=dict(sorted(by_k.items())))
    logger.info(f"forests={counts.total}, spanning trees={by_k.get(1, 0)} on N={ps.N}")
    return counts


# --- Explicit enumeration ---

def iter_plane_graph_masks(
    table: SegmentTable,
    required: int = 0,
    min_edges: int = 0,
    max_edges: Optional[int] = None,
) -> Iterator[int]:
    """
    Depth-first generator over crossing-free masks containing `required`,
    with edge count in [min_edges, max_edges]. Deterministic order.
    """
    if not table.is_crossing_free(required):
        return
    max_edges = table.size if max_edges is None else max_edges
    start_available = table.full_mask
    rest = required
    while rest:
        low = rest & -rest
        start_available &= ~table.crossings[low.bit_length() - 1]
        rest ^= low
    start_available &= ~required
    stack = [(start_available, required, bin(required).count("1"))]
    while stack:
        available, chosen, count = stack.pop()
        if count > max_edges or count + bin(available).count("1") < min_edges:
            continue
        if available == 0:
            yield chosen
            continue
        low = available & -available
        i = low.bit_length() - 1
        stack.append((available ^ low, chosen, count))
        stack.append((available & ~low & ~table.crossings[i], chosen | low, count + 1))


def iter_plane_graphs(
    ps: PointSet,
    predicate: Optional[Callable[[PlaneGraph], bool]] = None,
    cap: Optional[int] = None,
) -> Iterator[PlaneGraph]:
    """
    Every crossing-free graph of ps satisfying `predicate`.

    Raises:
        InstanceTooLarge: if N exceeds the pg cap.
    """
    _check_cap(ps, cap)
    table = SegmentTable.build(ps)
    for mask in iter_plane_graph_masks(table):
        graph = PlaneGraph.from_mask(ps, table, mask)
        if predicate is None or predicate(graph):
            yield graph


# --- Quadrangulations ---

def quadrangulation_edge_count(ps: PointSet) -> int:
    return 2 * ps.n + 3 * ps.h // 2 - 2


def is_quadrangulation(ps: PointSet, edges) -> bool:
    """
    Connected, contains every hull edge, no isolated vertex, and every bounded
    face is a quadrilateral on four distinct vertices.
    """
    edges = {edge_key(*e) for e in edges}
    if ps.h % 2 or not ps.hull_edges() <= edges:
        return False
    g = to_networkx((ps.N, edges))
    if min(d for _, d in g.degree()) == 0 or not nx.is_connected(g):
        return False
    rotation = {v: ccw_neighbor_order(ps.points, v, list(g.neighbors(v))) for v in g.nodes}
    outer_start = (ps.hull[1], ps.hull[0])
    visited = set()
    for a, b in sorted(edges):
        for start in ((a, b), (b, a)):
            if start in visited:
                continue
            cycle = []
            darts = set()
            u, v = start
            while (u, v) not in visited:
                visited.add((u, v))
                darts.add((u, v))
                cycle.append(u)
                rot = rotation[v]
                w = rot[rot.index(u) - 1]
                u, v = v, w
            if outer_start in darts:
                if len(cycle) != ps.h:
                    return False
                continue
            if len(cycle) != 4 or len(set(cycle)) != 4:
                return False
    return True


def count_quadrangulations(ps: PointSet, cap: Optional[int] = None) -> int:
    """
    Raises:
        InstanceTooLarge: if N exceeds the pg cap.
    """
    _check_cap(ps, cap)
    if ps.h % 2:
        return 0
    table = SegmentTable.build(ps)
    m = quadrangulation_edge_count(ps)
    total = sum(
        1 for mask in iter_plane_graph_masks(table, required=table.hull_mask, min_edges=m, max_edges=m)
        if is_quadrangulation(ps, table.edges_of(mask))
    )
    logger.info(f"quadrangulations={total} on N={ps.N}")
    return total


# --- Predicates ---

@dataclass(frozen=True)
class Predicate:
    """A built-in graph filter. `value` is m for edge-count kinds and k for k-forest."""
    kind: str
    value: Optional[int] = None

    KINDS = ("all", "exactly", "at-most", "at-least", "forest", "spanning-tree",
             "k-forest", "quadrangulation", "triangulation")

    def __str__(self) -> str:
        return self.kind if self.value is None else f"{self.kind}:{self.value}"


def parse_predicate(text: str) -> Predicate:
    """Parse "all", "exactly:5", "at-most:7", "k-forest:2", "quadrangulation", ..."""
    kind, _, raw = text.strip().lower().partition(":")
    kind = kind.replace("_", "-")
    if kind not in Predicate.KINDS:
        raise ValueError(f"unknown predicate '{text}' (choose from {', '.join(Predicate.KINDS)})")
    needs_value = kind in ("exactly", "at-most", "at-least", "k-forest")
    if needs_value and not raw:
        raise ValueError(f"predicate '{kind}' needs a value, e.g. {kind}:3")
    if not needs_value and raw:
        raise ValueError(f"predicate '{kind}' takes no value")
    value = int(raw) if raw else None
    if value is not None and value < 0:
        raise ValueError(f"predicate value must be non-negative, got {value}")
    return Predicate(kind, value)


def enumerate_plane_graphs(
    ps: PointSet,
    predicate: Predicate,
    cap: Optional[int] = None,
    parallel: bool = False,
    tri_cap: Optional[int] = None,
) -> CountReport:
    """
    Count crossing-free graphs satisfying a built-in predicate. The report
    carries the supporting totals the count was derived from.

    The triangulation predicate is answered by flip-graph search, so it is
    limited by the tri cap rather than the pg cap.

    Raises:
        InstanceTooLarge: if N exceeds the cap that applies.
    """
    report = CountReport(n_points=ps.N, hull_size=ps.h, predicate=str(predicate))
    kind, value = predicate.kind, predicate.value
    if kind == "triangulation":
        report.tri = count_triangulations(ps, tri_cap, parallel)
        report.predicate_count = report.tri
        return report
    _check_cap(ps, cap)
    if kind in ("all", "exactly", "at-most", "at-least"):
        histogram = edge_count_histogram(ps, cap, parallel)
        report.by_edge_count = histogram
        report.pg = sum(histogram.values())
        if kind == "all":
            report.predicate_count = report.pg
        elif kind == "exactly":
            report.predicate_count = histogram.get(value, 0)
        elif kind == "at-most":
            report.predicate_count = sum(c for m, c in histogram.items() if m <= value)
        else:
            report.predicate_count = sum(c for m, c in histogram.items() if m >= value)
    elif kind in ("forest", "spanning-tree", "k-forest"):
        forests = forest_counts(ps, cap, parallel)
        report.forests = forests
        report.st = forests.by_k.get(1, 0)
        if kind == "forest":
            report.predicate_count = forests.total
        elif kind == "spanning-tree":
            report.predicate_count = report.st
        else:
            report.predicate_count = forests.by_k.get(value, 0)
    else:
        report.quadrangulations = count_quadrangulations(ps, cap)
        report.predicate_count = report.quadrangulations
    return report


def histogram_csv(histogram: Dict[int, int]) -> str:
    lines = ["m,count"]
    lines.extend(f"{m},{c}" for m, c in sorted(histogram.items()))
    return "\n".join(lines) + "\n"
