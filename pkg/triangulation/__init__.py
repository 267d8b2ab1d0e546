"""
triangulation

Triangulation values over a PointSet, flips and serialization.
"""

from triangulation.triangulation import (
    CanonicalKey,
    Triangulation,
    build_initial,
    canonical_key,
    check_invariants,
    triangulation_from_dict,
    triangulation_to_dict,
)

__all__ = [
    "CanonicalKey",
    "Triangulation",
    "build_initial",
    "canonical_key",
    "check_invariants",
    "triangulation_from_dict",
    "triangulation_to_dict",
]
