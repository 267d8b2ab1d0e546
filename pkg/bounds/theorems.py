"""
bounds/theorems.py

Per-point exponential bases for the number of crossing-free graphs, spanning
trees, forests and quadrangulations of a point set, each relative to its number
of triangulations. Everything is evaluated in the log domain and returned as a
base; nothing here raises a number to the N-th power except hull_ratio.
"""

import logging
import math
from typing import List

import numpy as np
from scipy.optimize import minimize_scalar

import config
from stem.exceptions import ConvergenceFailure, DomainError
from stem.models import BoundReport, CurveSample

logger = logging.getLogger(__name__)

PEAK_C = 19 / 12
PEAK_BASE = 4 * math.sqrt(3)
_XATOL = 1e-10


def _xlogx(x: float) -> float:
    return 0.0 if x <= 0 else x * math.log(x)


def _entropy(x: float) -> float:
    """Natural-log binary entropy."""
    return -_xlogx(x) - _xlogx(1 - x)


def t_of(c: float) -> float:
    """
    Inner optimum t(c) = (sqrt(49/4 + 3c + c^2) - 5/2 - c) / 2.

    Raises:
        DomainError: unless 0 <= c < 3.
    """
    if not 0 <= c < 3:
        raise DomainError(f"t(c) needs 0 <= c < 3, got {c}")
    t = 0.5 * (math.sqrt(12.25 + 3 * c + c * c) - 2.5 - c)
    return min(max(t, 0.0), 0.5)


def log_B(c: float) -> float:
    t = t_of(c)
    u = max(c + t - 0.5, 0.0)
    v = 3 - c - t
    z = max(0.5 - t, 0.0)
    return (2.5 * math.log(5) - math.log(8)
            - _xlogx(u) - _xlogx(v) - (t * math.log(2 * t) if t > 0 else 0.0) - _xlogx(z))


def B(c: float) -> float:
    """
    Base of the bound on crossing-free graphs with cN edges, per triangulation.

    Raises:
        DomainError: unless 0 <= c < 3.
    """
    return math.exp(log_B(c))


def _report(name: str, base: float, optimizer: float | None = None, cited: bool = False) -> BoundReport:
    return BoundReport(
        name=name,
        base=base,
        optimizer=optimizer,
        absolute_base=None if cited else base * config.TRIANGULATION_BOUND_BASE,
        cited=cited,
    )


def _check_open(c: float) -> None:
    if not 0 < c < 3:
        raise DomainError(f"edge density c must satisfy 0 < c < 3, got {c}")


def pgc_bound(c: float) -> BoundReport:
    """Graphs with exactly cN edges."""
    _check_open(c)
    return _report(f"pg_exactly({c:g}N)", B(c), t_of(c))


def pgcc_bound(c: float) -> BoundReport:
    """Graphs with at most cN edges."""
    _check_open(c)
    if c <= PEAK_C:
        return _report(f"pg_at_most({c:g}N)", B(c), t_of(c))
    return _report(f"pg_at_most({c:g}N)", PEAK_BASE, PEAK_C)


def pgccc_bound(c: float) -> BoundReport:
    """Graphs with at least cN edges."""
    _check_open(c)
    if c >= PEAK_C:
        return _report(f"pg_at_least({c:g}N)", B(c), t_of(c))
    return _report(f"pg_at_least({c:g}N)", PEAK_BASE, PEAK_C)


def plane_graph_bound() -> BoundReport:
    return _report("plane_graphs", PEAK_BASE, PEAK_C)


def quadrangulation_bound() -> BoundReport:
    """Quadrangulations have exactly 2N - 2 - h/2 < 2N edges; base B(2)."""
    return _report("quadrangulations", B(2.0), t_of(2.0))


def _log_hull_ratio(N: int, h: int) -> float:
    if not 3 <= h <= N:
        raise DomainError(f"need 3 <= h <= N, got N={N}, h={h}")
    if 2 * h <= N:
        return N * math.log(PEAK_BASE) - h * math.log(2)
    return N * math.log(8) + h * math.log(3 / 8)


def hull_ratio(N: int, h: int) -> float:
    """
    Upper bound on pg(S) / tri(S) for N points with h on the hull:
    (4 sqrt 3)^N / 2^h when h <= N/2, otherwise 8^N (3/8)^h.

    Raises:
        DomainError: unless 3 <= h <= N.
    """
    return math.exp(_log_hull_ratio(N, h))


def hull_ratio_base(N: int, h: int) -> float:
    """N-th root of hull_ratio."""
    return math.exp(_log_hull_ratio(N, h) / N)


# --- Spanning trees and forests ---

def _log_spanning_first(x: float) -> float:
    # C(N/2, xN) (5 / (1/2 + x))^((1/2 + x) N) 2^(-xN), per point
    return 0.5 * _entropy(2 * x) + (0.5 + x) * math.log(5 / (0.5 + x)) - x * math.log(2)


def _log_spanning_second(x: float) -> float:
    return math.log(config.SPANNING_TREE_BASE) - x * math.log(2)


def spanning_tree_ratio() -> BoundReport:
    """
    Threshold a in (0, 1/4) balancing the small-j degree-product estimate
    against the cited spanning-tree bound.

    Raises:
        ConvergenceFailure: if the bounded minimizer does not converge.
    """
    result = minimize_scalar(
        lambda x: max(_log_spanning_first(x), _log_spanning_second(x)),
        bounds=(1e-9, 0.25),
        method="bounded",
        options={"xatol": _XATOL},
    )
    if not result.success:
        raise ConvergenceFailure(f"spanning tree threshold search failed: {result.message}")
    base = math.exp(result.fun)
    logger.debug(f"spanning_tree_ratio: a*={result.x:.6f} base={base:.6f}")
    return _report("spanning_trees", base, float(result.x))


def forest_ratio() -> BoundReport:
    """
    Maximize over x = k/N the smaller of two k-forest bounds: graphs with
    (1 - x)N edges, and spanning trees with k - 1 edges deleted.

    Raises:
        ConvergenceFailure: if the bounded minimizer does not converge.
    """
    log_tree = math.log(spanning_tree_ratio().base)

    def negative_min(x: float) -> float:
        return -min(log_B(1 - x), _entropy(x) + log_tree)

    result = minimize_scalar(negative_min, bounds=(1e-9, 0.5), method="bounded", options={"xatol": _XATOL})
    if not result.success:
        raise ConvergenceFailure(f"forest balance search failed: {result.message}")
    base = math.exp(-result.fun)
    logger.debug(f"forest_ratio: x*={result.x:.6f} base={base:.6f}")
    return _report("forests", base, float(result.x))


# --- Curve and reference data ---

def emit_curve(c_min: float, c_max: float, step: float) -> List[CurveSample]:
    """
    Sample (c, t(c), B(c)) from c_min to c_max inclusive.

    Raises:
        DomainError: unless 0 <= c_min < c_max < 3 and step > 0.
    """
    if not (0 <= c_min < c_max < 3) or step <= 0:
        raise DomainError(f"curve needs 0 <= min < max < 3 and step > 0, got {c_min}, {c_max}, {step}")
    count = int(math.floor((c_max - c_min) / step + 1e-9)) + 1
    cs = c_min + np.arange(count) * step
    return [CurveSample(c=float(c), t=t_of(float(c)), B=B(float(c))) for c in cs]


def curve_csv(samples: List[CurveSample]) -> str:
    lines = ["c,t,B"]
    lines.extend(f"{s.c:.6f},{s.t:.12f},{s.B:.12f}" for s in samples)
    return "\n".join(lines) + "\n"


def known_ratios() -> List[BoundReport]:
    """Reference asymptotic ratios for specific configurations; not computed here."""
    return [
        _report("convex_position_pg_per_tri", 2.9125, cited=True),
        _report("convex_position_st_per_tri", 1.6875, cited=True),
        _report("convex_position_forests_per_tri", 2.055, cited=True),
        _report("double_chain_pg_per_tri", 4.975, cited=True),
    ]


def all_bounds() -> List[BoundReport]:
    """Every computed base, followed by the cited reference ratios."""
    at_most_n = pgcc_bound(1.0)
    return [
        plane_graph_bound(),
        spanning_tree_ratio(),
        forest_ratio(),
        quadrangulation_bound(),
        at_most_n,
        BoundReport(name="hull_ratio_convex_position", base=hull_ratio_base(12, 12)),
        *known_ratios(),
    ]
