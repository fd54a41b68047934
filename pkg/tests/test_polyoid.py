import math
import random
from fractions import Fraction

import pytest

from afel.errors import PreconditionError
from afel.geometry import (
    Direction,
    convex_hull,
    segment,
    singleton,
    support_set,
    support_value,
    translate,
)
from afel.numerics import mean_width_3d, steiner_point_3d
from afel.polyoid import (
    BodyMeasure,
    body_of_measure,
    diam_sum_check,
    hexagon_fixture,
    is_k_tope,
    mpos_sample,
    pspan_containment,
    steiner_normalize,
    support_pushforward,
    verify_generating,
)

from conftest import random_body


def sample_directions(n, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        z = tuple(rng.randrange(-6, 7) for _ in range(n))
        if any(z):
            out.append(Direction.of(z))
    return out


def test_body_of_dirac():
    p = convex_hull([(0, 0), (2, 0), (1, 3)])
    assert body_of_measure(BodyMeasure.of([(1, p)])) == p


def test_body_of_two_segments():
    mu = BodyMeasure.of([
        (Fraction(1, 2), segment((0, 0), (2, 0))),
        (Fraction(1, 2), segment((0, 0), (0, 2))),
    ])
    assert body_of_measure(mu) == convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])


def test_hexagon_fixture_measures():
    fx = hexagon_fixture()
    dirs = sample_directions(2, 64, 5)
    for mu in fx["measures"]:
        assert verify_generating(mu, fx["body"], dirs)
    # the shifted variant generates the translated hexagon, not the hexagon
    assert not verify_generating(fx["shifted_measure"], fx["body"], dirs)
    moved = translate(fx["body"], fx["shift"])
    assert verify_generating(fx["shifted_measure"], moved, dirs)


def test_verify_rejects_wrong_body_and_weights():
    p = convex_hull([(0, 0), (1, 0), (0, 1)])
    q = convex_hull([(0, 0), (2, 0), (0, 2)])
    dirs = sample_directions(2, 32, 9)
    assert not verify_generating(BodyMeasure.of([(1, q)]), p, dirs)
    s1 = segment((0, 0), (1, 0))
    s2 = segment((0, 0), (0, 1))
    good = BodyMeasure.of([(Fraction(1, 2), s1), (Fraction(1, 2), s2)])
    k = body_of_measure(good)
    eps = Fraction(1, 10)
    skew = BodyMeasure.of([(Fraction(1, 2) + eps, s1), (Fraction(1, 2) - eps, s2)])
    assert not verify_generating(skew, k, dirs)


def test_is_k_tope(unit_cube):
    assert is_k_tope(segment((0, 0), (1, 0)), 2)
    assert not is_k_tope(convex_hull([(0, 0), (1, 0), (0, 1)]), 2)
    assert is_k_tope(unit_cube, 8)


def test_mpos_sample():
    fx = hexagon_fixture()
    mu = fx["measures"][3]
    zero = mpos_sample(mu, [0, 0, 0])
    assert zero == singleton((0, 0))
    again = mpos_sample(mu, [q for q, _ in mu.atoms])
    assert again == fx["body"]
    first = mpos_sample(mu, [1, 0, 0])
    assert first == mu.atoms[0][1]


def test_pspan_containment():
    fx = hexagon_fixture()
    mu = fx["measures"][3]
    assert pspan_containment(mu, [1, 1, 1])
    assert pspan_containment(mu, [1, 0, 0])
    rng = random.Random(12)
    for _ in range(10):
        atoms = [(Fraction(1, 2), random_body(rng, 3)),
                 (Fraction(1, 2), random_body(rng, 3))]
        mu = BodyMeasure.of(atoms)
        coeffs = [Fraction(rng.randrange(0, 4), rng.randrange(1, 3)) for _ in atoms]
        assert pspan_containment(mu, coeffs)


def test_macroid_identity_random_directions():
    rng = random.Random(21)
    atoms = [(Fraction(1, 3), random_body(rng, 3)),
             (Fraction(1, 3), random_body(rng, 3)),
             (Fraction(1, 3), random_body(rng, 3))]
    mu = BodyMeasure.of(atoms)
    k = body_of_measure(mu)
    for z in sample_directions(3, 200, 77):
        assert support_value(k, z) == sum(q * support_value(p, z) for q, p in mu.atoms)


def test_diam_sum_examples():
    s1 = segment((0, 0), (1, 0))
    s2 = segment((0, 0), (0, 1))
    rep = diam_sum_check([s1, s2])
    assert rep.holds
    assert abs(rep.lhs[0] - 2) < 1e-12
    assert abs(rep.rhs[0] - 2 * math.sqrt(2 * math.pi)) < 1e-12
    assert diam_sum_check([singleton((5, 5))]).holds


def test_diam_sum_random_families():
    rng = random.Random(33)
    worst = 0.0
    for n in (2, 3):
        for _ in range(10):
            bodies = [random_body(rng, n) for _ in range(rng.randrange(1, 11))]
            rep = diam_sum_check(bodies)
            assert rep.holds
            if rep.rhs[1] > 0:
                worst = max(worst, rep.lhs[1] / rep.rhs[0])
    # report only: observed ratio never approaches the constant
    print(f"largest observed lhs/rhs ratio: {worst:.4f}")


def test_support_pushforward():
    fx = hexagon_fixture()
    mu = fx["measures"][3]
    z = Direction.of((1, 0))
    push = support_pushforward(mu, z)
    assert body_of_measure(push) == support_set(fx["body"], z)
    p = convex_hull([(0, 0), (3, 0), (0, 3)])
    dirac = BodyMeasure.of([(1, p)])
    push = support_pushforward(dirac, Direction.of((0, 1)))
    assert push.atoms[0][1] == support_set(p, Direction.of((0, 1)))


def test_mean_width_and_steiner_additivity():
    rng = random.Random(44)
    atoms = [(Fraction(1, 2), random_body(rng, 3, full_dim=True)),
             (Fraction(1, 2), random_body(rng, 3, full_dim=True))]
    mu = BodyMeasure.of(atoms)
    k = body_of_measure(mu)
    wk = mean_width_3d(k).value
    assert abs(wk - sum(float(q) * mean_width_3d(p).value for q, p in atoms)) < 1e-9
    sk = steiner_point_3d(k)
    for c in range(3):
        target = sum(float(q) * steiner_point_3d(p)[c].value for q, p in atoms)
        assert abs(sk[c].value - target) < 1e-9


def test_steiner_normalize():
    mu = BodyMeasure.of([
        (Fraction(1, 2), segment((0, 0, 0), (2, 0, 0))),
        (Fraction(1, 2), segment((1, 1, 1), (1, 5, 1))),
    ])
    out = steiner_normalize(mu)
    assert out.approximate
    total = sum(w.value for w, _ in out.atoms)
    assert abs(total - 1) <= 1e-9
    # each normalized atom: centered, mean width 1 (segment of length 2)
    for _, body in out.atoms:
        a, b = body.vertices
        mid = [(x + y) / 2 for x, y in zip(a, b)]
        assert all(abs(c) < 1e-9 for c in mid)
        length = math.dist(a, b)
        assert abs(length - 2.0) < 1e-9


def test_steiner_normalize_three_segments():
    # the three-segment measure pattern, embedded in 3D: weights pick up the
    # relative mean widths, and the normalized body has mean width 1
    third = Fraction(1, 3)
    mu = BodyMeasure.of([
        (third, segment((0, 0, 0), (Fraction(3, 2), 0, 0))),
        (third, segment((0, 0, 0), (0, Fraction(3, 2), 0))),
        (third, segment((0, 0, 0), (Fraction(3, 2), Fraction(3, 2), 0))),
    ])
    out = steiner_normalize(mu)
    weights = [w.value for w, _ in out.atoms]
    assert abs(sum(weights) - 1) <= 1e-9
    # normalized body mean width = sum of weights * 1 = 1
    lengths = [math.dist(*body.vertices) for _, body in out.atoms]
    assert all(abs(l - 2.0) < 1e-9 for l in lengths)
    width_of_body = sum(w * (l / 2) for w, l in zip(weights, lengths))
    assert abs(width_of_body - 1.0) <= 1e-9
    # the diagonal segment is longer, so its weight is larger
    assert weights[2] > weights[0] == pytest.approx(weights[1])


def test_steiner_normalize_rejects_points():
    mu = BodyMeasure.of([(1, singleton((1, 2, 3)))])
    with pytest.raises(PreconditionError):
        steiner_normalize(mu)


def test_measure_invariants():
    with pytest.raises(PreconditionError):
        BodyMeasure.of([(Fraction(1, 2), singleton((0, 0)))])
    with pytest.raises(PreconditionError):
        BodyMeasure.of([])
