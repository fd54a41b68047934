"""Acceptance suite: one test per criterion, exact tolerances pinned.

Each test prints a single PASS line on success (run with -s to see them);
runtime-bounded criteria assert their own budget.
"""

import math
import random
import time
from fractions import Fraction

from afel.afi import (
    afi_check,
    equality_by_measure,
    equality_by_support,
    linearity_equivalence,
)
from afel.area_measure import (
    ball_measure_numeric,
    ball_support_arcs,
    significant_atoms,
)
from afel.criticality import classify
from afel.generators import gen_mixed_body, gen_quad_tuple_4d, gen_zonotope
from afel.geometry import (
    Direction,
    SupportDiff,
    convex_hull,
    hausdorff_distance_sq,
    is_summand,
    minkowski_sum,
    minkowski_sum_many,
    scale_translate,
    segment,
    singleton,
)
from afel.macroid import (
    admissibility_check,
    load_admissible_fixture,
    partial_sum_census,
    zonotope_kernel,
)
from afel.mixed_volume import (
    mixed_volume,
    mixed_volume_interpolated,
    mixed_volume_via_measure,
)
from afel.polyoid import diam_sum_check, hexagon_fixture, verify_generating

from conftest import random_body, truncated_cube

SYM_CUBE = convex_hull([(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])
UNIT_CUBE = convex_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
E1 = segment((0, 0, 0), (1, 0, 0))
E2 = segment((0, 0, 0), (0, 1, 0))
E3 = segment((0, 0, 0), (0, 0, 1))


def test_criterion_01_route_agreement():
    t0 = time.time()
    rng = random.Random(101)
    for _ in range(50):
        bodies = [random_body(rng, 3, max_points=5) for _ in range(3)]
        v = mixed_volume(bodies)
        assert mixed_volume_interpolated(bodies) == v
        assert mixed_volume_via_measure(bodies) == v
    for _ in range(20):
        bodies = [random_body(rng, 2, max_points=7, span=4) for _ in range(2)]
        v = mixed_volume(bodies)
        assert mixed_volume_interpolated(bodies) == v
        assert mixed_volume_via_measure(bodies) == v
    for seed in range(5):
        bodies = gen_quad_tuple_4d(seed)
        v = mixed_volume(bodies)
        assert mixed_volume_interpolated(bodies) == v
        assert mixed_volume_via_measure(bodies) == v
    elapsed = time.time() - t0
    assert elapsed < 10.0, f"route agreement took {elapsed:.1f}s"
    print(f"PASS criterion 1: three mixed-volume routes identical on 75 seeded "
          f"tuples in {elapsed:.1f}s")


def test_criterion_02_known_values():
    assert mixed_volume([UNIT_CUBE] * 3) == 1
    assert mixed_volume([E1, E2, E3]) == Fraction(1, 6)
    assert mixed_volume([UNIT_CUBE, UNIT_CUBE, E1]) == Fraction(1, 3)
    print("PASS criterion 2: known mixed volumes 1, 1/6, 1/3 exact")


def test_criterion_03_afi_nonnegative():
    rng = random.Random(103)
    for _ in range(100):
        k = random_body(rng, 3)
        l = random_body(rng, 3)
        c = random_body(rng, 3)
        rep = afi_check(k, l, [c])
        assert rep.discriminant >= 0
    print("PASS criterion 3: discriminant nonnegative on 100 seeded triples")


def test_criterion_04_homothety_equality():
    rng = random.Random(104)
    for a in (Fraction(1, 3), Fraction(1), Fraction(7, 2)):
        x = tuple(Fraction(rng.randrange(-8, 9), rng.randrange(1, 5))
                  for _ in range(3))
        l = scale_translate(SYM_CUBE, a, x)
        rep = afi_check(SYM_CUBE, l, [SYM_CUBE])
        assert rep.discriminant == 0
        assert equality_by_measure(SYM_CUBE, l, [SYM_CUBE]) == 1 / a
        witness = equality_by_support(SYM_CUBE, l, SYM_CUBE)
        assert witness == (1 / a, tuple(-c / a for c in x))
    print("PASS criterion 4: homothety equality with witnesses (1/a, -x/a)")


def test_criterion_05_semicriticality_iff_positive():
    rng = random.Random(105)
    for trial in range(100):
        bodies = [gen_mixed_body(rng.randrange(10 ** 6)) for _ in range(3)]
        semi = classify(bodies).at_least("semicritical")
        positive = mixed_volume(bodies) > 0
        assert semi == positive
    print("PASS criterion 5: semicritical iff positive mixed volume, 100 tuples")


def test_criterion_06_ball_support():
    arcs = ball_support_arcs(SYM_CUBE)
    assert len(arcs.arcs) == 12
    expected = set()
    for i in range(3):
        for j in range(i + 1, 3):
            for si in (-1, 1):
                for sj in (-1, 1):
                    zi = tuple(si if k == i else 0 for k in range(3))
                    zj = tuple(sj if k == j else 0 for k in range(3))
                    expected.add(frozenset((zi, zj)))
    got = {frozenset((z1.z, z2.z)) for z1, z2 in arcs.arcs}
    assert got == expected
    # exact membership of circle points, non-membership elsewhere
    assert arcs.contains(Direction.of((3, -4, 0)))
    assert arcs.contains(Direction.of((0, 5, 12)))
    assert not arcs.contains(Direction.of((1, 1, 1)))
    assert not arcs.contains(Direction.of((2, 1, 3)))

    measure = ball_measure_numeric([SYM_CUBE], 200)
    atoms = significant_atoms(measure, 1e-9)
    total = sum(mass for _, mass in atoms)
    near = 0.0
    for z, mass in atoms:
        norm = math.sqrt(z.norm_sq())
        angdist = min(abs(math.asin(z.z[k] / norm)) for k in range(3))
        if angdist <= 0.15:
            near += mass
    assert near / total >= 0.99
    print(f"PASS criterion 6: 12 exact arcs = coordinate circles; numeric "
          f"oracle mass within 0.15 rad: {near / total:.4f}")


def test_criterion_07_truncated_cube_equality():
    l = truncated_cube(Fraction(1, 4))
    rep = afi_check(SYM_CUBE, l, [SYM_CUBE])
    assert rep.v_kl > 0
    assert rep.discriminant == 0
    assert equality_by_measure(SYM_CUBE, l, [SYM_CUBE]) == 1
    assert equality_by_support(SYM_CUBE, l, SYM_CUBE) == (1, (0, 0, 0))
    assert hausdorff_distance_sq(SYM_CUBE, l) > 0
    print("PASS criterion 7: cube vs corner-truncated cube: exact equality, "
          "witness (1, 0), bodies not homothetic")


def _random_box(rng, centered=True):
    dims = [rng.randrange(1, 4) for _ in range(3)]
    lo = [-d for d in dims] if centered else [0, 0, 0]
    return convex_hull([(x, y, z)
                        for x in (lo[0], dims[0])
                        for y in (lo[1], dims[1])
                        for z in (lo[2], dims[2])])


def _truncated_box(rng, box):
    # cut every corner by a generic plane through points on the three edges
    pts = []
    xs = sorted({v[0] for v in box.vertices})
    ys = sorted({v[1] for v in box.vertices})
    zs = sorted({v[2] for v in box.vertices})
    step = min(xs[1] - xs[0], ys[1] - ys[0], zs[1] - zs[0])
    for cx in (xs[0], xs[1]):
        for cy in (ys[0], ys[1]):
            for cz in (zs[0], zs[1]):
                dx = Fraction(rng.randrange(1, 4), 16) * step
                dy = Fraction(rng.randrange(1, 4), 16) * step
                dz = Fraction(rng.randrange(1, 4), 16) * step
                sx = 1 if cx == xs[0] else -1
                sy = 1 if cy == ys[0] else -1
                sz = 1 if cz == zs[0] else -1
                pts.append((cx + sx * dx, cy, cz))
                pts.append((cx, cy + sy * dy, cz))
                pts.append((cx, cy, cz + sz * dz))
    return convex_hull(pts)


def test_criterion_08_linearity_equivalence():
    rng = random.Random(108)
    agreements = 0
    for trial in range(30):
        family = trial % 3
        if family == 0:
            k = random_body(rng, 3)
            x = tuple(rng.randrange(-3, 4) for _ in range(3))
            f = SupportDiff(scale_translate(k, 1, x), k)
            c = random_body(rng, 3, full_dim=True)
            expect = True
        elif family == 1:
            f = SupportDiff(random_body(rng, 3), random_body(rng, 3))
            c = random_body(rng, 3, full_dim=True)
            expect = None
        else:
            box = _random_box(rng)
            f = SupportDiff(box, _truncated_box(rng, box))
            c = _random_box(rng)
            expect = True
        rep = linearity_equivalence(f, c)
        assert rep.agree
        if expect is not None:
            assert rep.measure_vanishes == expect
        agreements += 1
    assert agreements == 30
    print("PASS criterion 8: measure vanishing iff linear on arcs, 30/30 agree")


def test_criterion_09_generating_measures():
    fx = hexagon_fixture()
    rng = random.Random(109)
    dirs = []
    while len(dirs) < 64:
        z = tuple(rng.randrange(-9, 10) for _ in range(2))
        if any(z):
            dirs.append(Direction.of(z))
    for mu in fx["measures"]:
        assert verify_generating(mu, fx["body"], dirs)
    print("PASS criterion 9: all four generating measures verify exactly")


def test_criterion_10_diameter_sum():
    rng = random.Random(110)
    for trial in range(100):
        n = 2 if trial % 2 else 3
        count = rng.randrange(1, 11)
        bodies = [random_body(rng, n, max_points=4, span=2) for _ in range(count)]
        rep = diam_sum_check(bodies)
        assert rep.holds
    print("PASS criterion 10: diameter-sum inequality certified on 100 families")


def test_criterion_11_zonotope_kernel():
    zk = zonotope_kernel(UNIT_CUBE)
    half = Fraction(1, 2)
    assert zk == convex_hull([(sx * half, sy * half, sz * half)
                              for sx in (-1, 1) for sy in (-1, 1) for sz in (-1, 1)])
    tetra = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert zonotope_kernel(tetra) == singleton((0, 0, 0))
    p = minkowski_sum(tetra, segment((0, 0, 0), (5, 3, 1)))
    assert zonotope_kernel(p) == segment(
        (Fraction(-5, 2), Fraction(-3, 2), Fraction(-1, 2)),
        (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2)))
    rng = random.Random(111)
    for seed in range(20):
        z = gen_zonotope(3, rng.randrange(2, 4), seed)
        p = minkowski_sum(z, random_body(rng, 3, max_points=4))
        zk = zonotope_kernel(p)
        for lam in (Fraction(1, 3), Fraction(1, 2), 1):
            assert is_summand(scale_translate(zk, lam, (0, 0, 0)), p)
    print("PASS criterion 11: kernels exact on cube/tetra/sum; 20 maximality "
          "spot-checks via the summand oracle")


def test_criterion_12_appendix_fixture():
    t0 = time.time()
    seq = load_admissible_fixture()
    assert admissibility_check(seq).passes
    for upto in (2, 3, 4):
        cen = partial_sum_census(seq, upto)
        assert cen.other == 0
        for prov in cen.provenance:
            assert prov.kind in ("triangle", "parallelogram")
            assert len(prov.sources) == (1 if prov.kind == "triangle" else 2)
    for upto in (1, 2, 3, 4):
        partial = minkowski_sum_many(seq[:upto])
        assert zonotope_kernel(partial) == singleton((0, 0, 0))
    elapsed = time.time() - t0
    assert elapsed < 30.0, f"census fixture run took {elapsed:.1f}s"
    print(f"PASS criterion 12: admissible fixture, clean census at m=2,3,4, "
          f"trivial kernels, in {elapsed:.1f}s")
