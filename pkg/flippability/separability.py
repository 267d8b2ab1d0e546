"""
flippability/separability.py

Separable edges of a convex decomposition and the counting ledger built on them.

An edge pq is separable at p when a line through p splits it from the other
edges at p; equivalently its two neighboring angles around p sum to more than
pi. In the counterclockwise rotation at p that is: the predecessor and
successor of q make a clockwise turn around p.
"""

import logging
from typing import Dict, List, Optional, Tuple

from flippability.decomposition import ConvexDecomposition
from geometry.pointset import EdgeKey, edge_key
from geometry.predicates import Orientation, ccw_neighbor_order, orientation
from stem.exceptions import BoundViolation, IdentityViolation
from stem.models import DecompositionDiagnostics, SeparabilityReport

logger = logging.getLogger(__name__)


def _rotations(decomposition: ConvexDecomposition) -> Dict[int, List[int]]:
    adjacency: Dict[int, List[int]] = {v: [] for v in range(decomposition.owner.N)}
    for a, b in decomposition.edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    pts = decomposition.owner.points
    return {v: ccw_neighbor_order(pts, v, nbrs) for v, nbrs in adjacency.items()}


def _separable_in_rotation(points, p: int, rotation: List[int], q: int) -> bool:
    if len(rotation) <= 2:
        return True
    i = rotation.index(q)
    prev_q = rotation[i - 1]
    next_q = rotation[(i + 1) % len(rotation)]
    return orientation(points[p], points[prev_q], points[next_q]) == Orientation.CLOCKWISE


def is_separable(decomposition: ConvexDecomposition, p: int, q: int) -> bool:
    """Is edge pq of the decomposition separable at p?"""
    if edge_key(p, q) not in decomposition.edges:
        raise IdentityViolation("edge membership", f"{edge_key(p, q)} is not in the decomposition")
    rotation = ccw_neighbor_order(decomposition.owner.points, p, decomposition.neighbors(p))
    return _separable_in_rotation(decomposition.owner.points, p, rotation, q)


def separable_edges(decomposition: ConvexDecomposition) -> Dict[int, List[int]]:
    """Interior vertex -> neighbors q such that pq is separable at p."""
    rotations = _rotations(decomposition)
    pts = decomposition.owner.points
    return {
        p: [q for q in rotations[p] if _separable_in_rotation(pts, p, rotations[p], q)]
        for p in decomposition.owner.interior_vertices()
    }


def separability_report(decomposition: ConvexDecomposition) -> SeparabilityReport:
    """
    Classify interior vertices by degree and separable edge count, then check
    the interior edge count and removed-edge count identities.

    Raises:
        IdentityViolation: if any classification or identity fails. These are
            implementation bugs, not bad input.
    """
    ps = decomposition.owner
    separable = separable_edges(decomposition)
    degree = {p: len(decomposition.neighbors(p)) for p in ps.interior_vertices()}

    v3 = v40 = v41 = v42 = 0
    for p, seps in separable.items():
        if degree[p] == 3:
            if len(seps) != 3:
                raise IdentityViolation("degree-3 separability", f"vertex {p} has {len(seps)} separable edges")
            v3 += 1
        elif degree[p] >= 4:
            if len(seps) > 2:
                raise IdentityViolation("degree-4 separability", f"vertex {p} has {len(seps)} separable edges")
            if len(seps) == 0:
                v40 += 1
            elif len(seps) == 1:
                v41 += 1
            else:
                v42 += 1
        else:
            raise IdentityViolation("interior degree", f"interior vertex {p} has degree {degree[p]}")

    separable_at: Dict[EdgeKey, int] = {}
    for p, seps in separable.items():
        for q in seps:
            key = edge_key(p, q)
            separable_at[key] = separable_at.get(key, 0) + 1

    interior_edges = decomposition.interior_edges
    for e in interior_edges:
        if e not in separable_at:
            raise IdentityViolation("separable endpoint", f"edge {e} is separable at no interior endpoint")

    m_double = sum(1 for count in separable_at.values() if count == 2)
    a = 3 * v3 + 2 * v42 + v41
    removed = len(decomposition.removed)

    if len(interior_edges) != a - m_double:
        raise IdentityViolation("interior edge count", f"m_int={len(interior_edges)} but a - m_double={a - m_double}")
    expected_removed = 3 * ps.n + ps.h - 3 - a + m_double
    if decomposition.source is not None and removed != expected_removed:
        raise IdentityViolation("removed edge count", f"|F|={removed} but 3n + h - 3 - a + m_double={expected_removed}")

    report = SeparabilityReport(
        v3=v3, v40=v40, v41=v41, v42=v42, m_double=m_double, a=a, removed_count=removed,
    )
    logger.debug(f"Separability: {report.model_dump()}")
    return report


def decomposition_check(
    decomposition: ConvexDecomposition,
    report: Optional[SeparabilityReport] = None,
) -> DecompositionDiagnostics:
    """
    Check the Euler, degree-sum, face, edge and removed-count bounds of a
    locally minimal decomposition.

    Raises:
        BoundViolation: naming the first identity or bound that fails.
    """
    ps = decomposition.owner
    N, h, n = ps.N, ps.h, ps.n
    report = report or separability_report(decomposition)
    f = len(decomposition.faces)
    m = len(decomposition.edges)
    m_int = len(decomposition.interior_edges)
    sizes = decomposition.face_sizes()
    removed = report.removed_count

    checks: List[Tuple[str, bool, str]] = [
        ("euler", f == m_int - n + 1, f"f={f}, m_int - n + 1={m_int - n + 1}"),
        ("degree sum", sum((k - 2) * c for k, c in sizes.items()) == 2 * n + h - 2,
         f"sum (k-2) f_k != 2n + h - 2 = {2 * n + h - 2}"),
        ("face bound", 2 * f <= 3 * N - 2 * h, f"2f={2 * f} > 3N - 2h={3 * N - 2 * h}"),
        ("edge bound", 2 * m <= 5 * N - 2 * h - 2, f"2m={2 * m} > 5N - 2h - 2={5 * N - 2 * h - 2}"),
        ("removed bound", 2 * removed >= N + report.v41 + 3 * report.v40 - 4,
         f"2|F|={2 * removed} < N + v41 + 3 v40 - 4={N + report.v41 + 3 * report.v40 - 4}"),
    ]
    for name, ok, detail in checks:
        if not ok:
            logger.error(f"Decomposition check '{name}' failed: {detail}")
            raise BoundViolation(name, detail)

    return DecompositionDiagnostics(
        v3=report.v3,
        v40=report.v40,
        v41=report.v41,
        v42=report.v42,
        m_double=report.m_double,
        removed=removed,
        faces=f,
        edges=m,
        interior_edges=m_int,
        face_sizes=sizes,
        face_slack=(3 * N - 2 * h) - 2 * f,
        edge_slack=(5 * N - 2 * h - 2) - 2 * m,
        removed_slack=2 * removed - (N + report.v41 + 3 * report.v40 - 4),
        identities_ok=True,
    )
