"""
bounds/catalan.py

Exact Catalan numbers. C_k counts the triangulations of a convex (k+2)-gon.
"""

import logging
from typing import List

from stem.models import CatalanTable

logger = logging.getLogger(__name__)

_table: List[int] = [1, 1]


def catalan(k: int) -> int:
    """k-th Catalan number via C_n = sum C_i C_{n-1-i}."""
    if k < 0:
        raise ValueError(f"Catalan index must be non-negative, got {k}")
    while len(_table) <= k:
        n = len(_table)
        _table.append(sum(_table[i] * _table[n - 1 - i] for i in range(n)))
    return _table[k]


def catalan_table(k: int) -> CatalanTable:
    """C_0..C_k, validated against the recurrence."""
    catalan(max(k, 1))
    return CatalanTable(values=list(_table[:max(k, 1) + 1]))


def doubling_holds(table: CatalanTable) -> bool:
    """C_{i+1} >= 2^i for every i >= 1 in the table."""
    return all(table.values[i + 1] >= 2 ** i for i in range(1, len(table.values) - 1))
