"""
geometry

Exact integer predicates, convex hulls and the labeled point-set model.
"""

from geometry.predicates import Orientation, ccw_neighbor_order, cross, orientation, segments_cross
from geometry.pointset import (
    EdgeKey,
    Point,
    PointSet,
    convex_hull,
    edge_key,
    parse_points,
    read_point_file,
    validate,
    write_point_file,
)

__all__ = [
    "EdgeKey",
    "Orientation",
    "Point",
    "PointSet",
    "ccw_neighbor_order",
    "convex_hull",
    "cross",
    "edge_key",
    "orientation",
    "parse_points",
    "read_point_file",
    "segments_cross",
    "validate",
    "write_point_file",
]
