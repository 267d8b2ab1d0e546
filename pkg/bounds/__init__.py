"""
bounds

Catalan numbers and the per-point exponential bases that bound crossing-free
graph counts relative to triangulation counts.
"""

from bounds.catalan import catalan, catalan_table, doubling_holds
from bounds.theorems import (
    PEAK_BASE,
    PEAK_C,
    B,
    all_bounds,
    curve_csv,
    emit_curve,
    forest_ratio,
    hull_ratio,
    hull_ratio_base,
    known_ratios,
    pgc_bound,
    pgcc_bound,
    pgccc_bound,
    plane_graph_bound,
    quadrangulation_bound,
    spanning_tree_ratio,
    t_of,
)

__all__ = [
    "B",
    "PEAK_BASE",
    "PEAK_C",
    "all_bounds",
    "catalan",
    "catalan_table",
    "curve_csv",
    "doubling_holds",
    "emit_curve",
    "forest_ratio",
    "hull_ratio",
    "hull_ratio_base",
    "known_ratios",
    "pgc_bound",
    "pgcc_bound",
    "pgccc_bound",
    "plane_graph_bound",
    "quadrangulation_bound",
    "spanning_tree_ratio",
    "t_of",
]
