"""
pytest configuration and shared fixtures for flipcount tests.
"""

import os

import pytest

# Tests run against the default caps regardless of the developer's environment
os.environ.pop("FLIPCOUNT_CAPS", None)

from generators.generators import gen_convex, gen_double_chain, gen_low_flip, gen_random
from geometry.pointset import validate
from triangulation.triangulation import build_initial


@pytest.fixture
def triangle_interior():
    """Triangle (0,0),(4,0),(0,4) with the interior point (1,1)."""
    return validate([(0, 0), (4, 0), (0, 4), (1, 1)])


@pytest.fixture
def unit_square():
    return validate([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def three_points():
    return validate([(0, 0), (3, 0), (0, 3)])


@pytest.fixture
def convex4():
    return gen_convex(4)


@pytest.fixture
def convex6():
    return gen_convex(6)


@pytest.fixture
def convex7():
    return gen_convex(7)


@pytest.fixture
def low_flip12():
    """(PointSet, Triangulation) of the 12-point low-flip construction."""
    return gen_low_flip(12)


@pytest.fixture
def double_chain3():
    return gen_double_chain(3)


@pytest.fixture
def random_sets():
    """Ten seeded random sets with 5..8 points."""
    return [gen_random(5 + seed % 4, seed) for seed in range(10)]


@pytest.fixture
def convex6_fan(convex6):
    return build_initial(convex6)
