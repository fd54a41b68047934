import random
from fractions import Fraction

import pytest

from afel.geometry import convex_hull, segment


@pytest.fixture
def unit_cube():
    return convex_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])


@pytest.fixture
def sym_cube():
    return convex_hull([(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])


@pytest.fixture
def tetra():
    return convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.fixture
def axis_segments():
    return [
        segment((0, 0, 0), (1, 0, 0)),
        segment((0, 0, 0), (0, 1, 0)),
        segment((0, 0, 0), (0, 0, 1)),
    ]


def truncated_cube(depth=Fraction(1, 4)):
    """Symmetric cube with all eight corners cut at the given depth."""
    pts = []
    for sx in (-1, 1):
        for sy in (-1, 1):
            for sz in (-1, 1):
                pts.append((sx * (1 - depth), sy, sz))
                pts.append((sx, sy * (1 - depth), sz))
                pts.append((sx, sy, sz * (1 - depth)))
    return convex_hull(pts)


def random_body(rng: random.Random, n: int, max_points: int = 6, span: int = 3,
                full_dim: bool = False):
    while True:
        pts = [tuple(rng.randrange(-span, span + 1) for _ in range(n))
               for _ in range(rng.randrange(2, max_points + 1))]
        p = convex_hull(pts)
        if not full_dim or p.dim == n:
            return p
