"""
generators/generators.py

Point configurations with known extremal behavior, plus seeded random sets.
All coordinates are integers; every output passes validate.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from geometry.pointset import PointSet, validate
from geometry.predicates import cross, segments_cross
from stem.exceptions import GeneralPositionFailure, SizeError, ValidationError
from stem.models import GeneratorSpec
from triangulation.triangulation import Triangulation

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 8


def gen_convex(N: int) -> PointSet:
    """N points on the parabola y = x^2, labeled in counterclockwise hull order."""
    if N < 3:
        raise SizeError(f"convex position needs N >= 3, got {N}")
    return validate([(i, i * i) for i in range(N)])


def _low_flip_attempt(N: int, attempt: int) -> Tuple[PointSet, Triangulation]:
    k = N // 2 + 1
    xs = [i * (attempt + 1) + attempt * i * i for i in range(k)]
    # scaled by 3 so triangle centroids land on integers
    corners = [(3 * x, 3 * x * x) for x in xs]
    centers = []
    faces = []
    for i in range(1, k - 1):
        (ax, ay), (bx, by), (cx, cy) = corners[0], corners[i], corners[i + 1]
        centers.append(((ax + bx + cx) // 3, (ay + by + cy) // 3))
        c = k + len(centers) - 1
        faces.extend([(0, i, c), (i, i + 1, c), (i + 1, 0, c)])
    ps = validate(corners + centers)
    return ps, Triangulation.from_faces(ps, faces)


def gen_low_flip(N: int) -> Tuple[PointSet, Triangulation]:
    """
    Convex (N/2 + 1)-gon fanned from vertex 0, with one interior point per fan
    triangle joined to its three corners. Only the N/2 - 2 fan chords flip.

    Raises:
        SizeError: unless N is even and at least 8.
        GeneralPositionFailure: if no attempted scaling is in general position.
    """
    if N < 8 or N % 2:
        raise SizeError(f"low_flip needs even N >= 8, got {N}")
    # attempt 0 (x = i) always has a centroid collinear with two corners
    for attempt in range(1, MAX_ATTEMPTS + 1):
        try:
            return _low_flip_attempt(N, attempt)
        except ValidationError as e:
            logger.debug(f"low_flip attempt {attempt} for N={N} degenerate: {e}")
    raise GeneralPositionFailure(f"low_flip N={N}: no general-position placement in {MAX_ATTEMPTS} attempts")


def _cross_visible(upper: List[Tuple[int, int]], lower: List[Tuple[int, int]]) -> bool:
    chain_edges = list(zip(upper, upper[1:])) + list(zip(lower, lower[1:]))
    for u in upper:
        for l in lower:
            for p, q in chain_edges:
                if segments_cross(u, l, p, q):
                    return False
    # each chain bends toward the gap (lower chain runs right to left)
    for chain in (upper, lower):
        for a, b, c in zip(chain, chain[1:], chain[2:]):
            if cross(a, b, c) <= 0:
                return False
    return True


def gen_double_chain(k: int) -> PointSet:
    """
    Two facing convex chains of k points each: upper chain 0..k-1 on
    y = H + x^2, lower chain k..2k-1 on y = -H - x^2. H grows until every
    upper point sees every lower point past both chains.

    Raises:
        SizeError: if k < 2.
    """
    if k < 2:
        raise SizeError(f"double chain needs k >= 2, got {k}")
    xs = [2 * i - (k - 1) for i in range(k)]
    H = (k - 1) ** 3 + 1
    while True:
        upper = [(x, H + x * x) for x in xs]
        lower = [(x, -H - x * x) for x in reversed(xs)]
        if _cross_visible(upper, lower):
            try:
                return validate(upper + lower)
            except ValidationError as e:
                logger.debug(f"double chain H={H} degenerate: {e}")
        H += 1


def random_points_with_stats(N: int, seed: int) -> Tuple[PointSet, int]:
    """
    N uniform points on the grid [0, 4N^2]^2, drawing again on any duplicate
    or collinear triple. Returns the set and the number of rejected draws.
    """
    if N < 3:
        raise SizeError(f"random set needs N >= 3, got {N}")
    rng = np.random.default_rng(seed)
    high = 4 * N * N
    points: List[Tuple[int, int]] = []
    rejected = 0
    while len(points) < N:
        x, y = (int(v) for v in rng.integers(0, high, size=2, endpoint=True))
        p = (x, y)
        bad = p in points or any(
            cross(points[i], points[j], p) == 0
            for i in range(len(points)) for j in range(i + 1, len(points))
        )
        if bad:
            rejected += 1
            continue
        points.append(p)
    logger.debug(f"gen_random N={N} seed={seed}: {rejected} rejected draws")
    return validate(points), rejected


def gen_random(N: int, seed: int) -> PointSet:
    return random_points_with_stats(N, seed)[0]


def generate(request: GeneratorSpec) -> Tuple[PointSet, Optional[Triangulation]]:
    """Build the configuration a GeneratorSpec names; low_flip also returns its triangulation."""
    logger.info(f"Generating {request.kind} n={request.n}")
    if request.kind == "convex":
        return gen_convex(request.n), None
    if request.kind == "low_flip":
        return gen_low_flip(request.n)
    if request.kind == "double_chain":
        return gen_double_chain(request.n // 2), None
    return gen_random(request.n, request.seed), None
