import math
import random
from fractions import Fraction

import pytest

from afel.area_measure import (
    ball_measure_numeric,
    ball_polytope,
    ball_support_arcs,
    mixed_area_diff,
    mixed_area_measure,
    significant_atoms,
)
from afel.errors import PreconditionError
from afel.geometry import (
    Direction,
    SupportDiff,
    convex_hull,
    scale_translate,
    segment,
    singleton,
)
from afel.mixed_volume import mixed_volume

from conftest import random_body


def test_cube_surface_measure(unit_cube):
    m = mixed_area_measure([unit_cube, unit_cube])
    expect = {Direction.of(z): 1 for z in
              [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]}
    assert m.atoms == expect


def test_cube_segment_measure(unit_cube):
    e3 = segment((0, 0, 0), (0, 0, 1))
    m = mixed_area_measure([unit_cube, e3])
    expect = {Direction.of(z): Fraction(1, 2) for z in
              [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)]}
    assert m.atoms == expect


def test_point_gives_zero_measure(unit_cube):
    assert mixed_area_measure([unit_cube, singleton((3, 1, 4))]).is_zero()


def test_integral_identity_random():
    rng = random.Random(55)
    for n in (2, 3):
        for _ in range(8):
            bodies = [random_body(rng, n) for _ in range(n - 1)]
            m = mixed_area_measure(bodies)
            probe = random_body(rng, n)
            lhs = Fraction(m.integrate_support(probe), n)
            assert lhs == mixed_volume(bodies + [probe])


def test_symmetry_and_multilinearity():
    rng = random.Random(56)
    a, b, c = (random_body(rng, 3) for _ in range(3))
    assert mixed_area_measure([a, b]) == mixed_area_measure([b, a])
    lam = Fraction(2, 5)
    scaled = scale_translate(a, lam, (0, 0, 0))
    lhs = mixed_area_measure([scaled, b])
    rhs = mixed_area_measure([a, b]).scaled(lam)
    assert lhs == rhs


def test_diff_measure_examples(unit_cube):
    f0 = SupportDiff(unit_cube, unit_cube)
    assert mixed_area_diff([f0, unit_cube]).is_zero()
    moved = scale_translate(unit_cube, 1, (2, 3, 4))
    assert mixed_area_diff([SupportDiff(moved, unit_cube), unit_cube]).is_zero()
    doubled = scale_translate(unit_cube, 2, (0, 0, 0))
    lhs = mixed_area_diff([SupportDiff(doubled, unit_cube), unit_cube])
    assert lhs == mixed_area_measure([unit_cube, unit_cube])


def test_total_measure_is_surface_area():
    # boxes: atom masses sum to the surface area
    rng = random.Random(57)
    for _ in range(5):
        a, b, c = (rng.randrange(1, 5) for _ in range(3))
        box = convex_hull([(x, y, z) for x in (0, a) for y in (0, b) for z in (0, c)])
        m = mixed_area_measure([box, box])
        area = 2 * (a * b + b * c + a * c)
        assert abs(m.total_mass_float() - area) < 1e-9


def test_ball_support_arcs_cube(sym_cube):
    arcs = ball_support_arcs(sym_cube)
    assert len(arcs.arcs) == 12
    # union = the three coordinate great circles: each arc spans two axes
    for z1, z2 in arcs.arcs:
        assert sorted(map(abs, z1.z)).count(0) == 2
        assert sorted(map(abs, z2.z)).count(0) == 2
    assert arcs.contains(Direction.of((1, 1, 0)))
    assert arcs.contains(Direction.of((0, -3, 4)))
    assert not arcs.contains(Direction.of((1, 1, 1)))


def test_ball_support_arcs_tetra(tetra):
    arcs = ball_support_arcs(tetra)
    assert len(arcs.arcs) == 6


def test_ball_support_requires_full_dim():
    flat = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
    with pytest.raises(PreconditionError):
        ball_support_arcs(flat)


def test_ball_measure_numeric_on_arcs(sym_cube):
    m = ball_measure_numeric([sym_cube], 200)
    arcs = ball_support_arcs(sym_cube)
    total = m.total_mass_float()
    on = sum(mass for z, mass in significant_atoms(m) if arcs.contains(z))
    assert on / total >= 0.99
    # inscribed approximation: total below the smooth-ball value 6*pi
    assert total <= 6 * math.pi


def test_ball_measure_point_entry():
    assert ball_measure_numeric([singleton((0, 0, 0))], 50).is_zero()


def test_ball_measure_refines(sym_cube):
    # support coverage improves with resolution: max angular gap shrinks
    def max_gap(m):
        best = 0.0
        for axis in range(3):
            angs = sorted(
                math.atan2(z.z[(axis + 2) % 3], z.z[(axis + 1) % 3])
                for z, _ in m.atoms.items() if z.z[axis] == 0)
            if len(angs) < 2:
                return math.tau
            gaps = [b - a for a, b in zip(angs, angs[1:])]
            gaps.append(angs[0] + math.tau - angs[-1])
            best = max(best, max(gaps))
        return best

    coarse = ball_measure_numeric([sym_cube], 60)
    fine = ball_measure_numeric([sym_cube], 240)
    assert max_gap(fine) <= max_gap(coarse)


def test_ball_measure_numeric_4d():
    tess = convex_hull([(x, y, z, w) for x in (0, 1) for y in (0, 1)
                        for z in (0, 1) for w in (0, 1)])
    m = ball_measure_numeric([tess, tess], 30)
    assert not m.is_zero()
    probe = convex_hull([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0),
                         (0, 0, 1, 0), (0, 0, 0, 1)])
    # the measure integrates support functions to exact mixed volumes
    from afel.area_measure import ball_polytope
    from afel.mixed_volume import mixed_volume
    b = ball_polytope(30, 4)
    lhs = Fraction(m.integrate_support(probe), 4)
    assert lhs == mixed_volume([b, tess, tess, probe])
