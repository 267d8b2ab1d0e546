"""
generators

Convex, low-flip, double-chain and seeded random point sets.
"""

from generators.generators import (
    gen_convex,
    gen_double_chain,
    gen_low_flip,
    gen_random,
    generate,
    random_points_with_stats,
)

__all__ = [
    "gen_convex",
    "gen_double_chain",
    "gen_low_flip",
    "gen_random",
    "generate",
    "random_points_with_stats",
]
