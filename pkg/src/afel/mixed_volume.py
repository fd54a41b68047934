"""Exact mixed volumes via three mutually independent routes.

The inclusion-exclusion expansion is the reference implementation; polynomial
interpolation and the area-measure integral exist as independent oracles and
must agree with it to the last bit.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import PreconditionError
from .geometry import (
    SupportDiff,
    VPolytope,
    minkowski_sum,
    minkowski_sum_many,
    scale_translate,
    support_value,
)
from .linalg import solve_linear


@dataclass(frozen=True)
class MixedVolumeResult:
    value: Fraction
    method: str  # "inclusion_exclusion" | "interpolation" | "facet_integral"


def _shoelace(verts) -> Fraction:
    s = 0
    for k in range(len(verts)):
        x0, y0 = verts[k]
        x1, y1 = verts[(k + 1) % len(verts)]
        s += x0 * y1 - x1 * y0
    return Fraction(abs(s), 2)


def volume(p: VPolytope) -> Fraction:
    """Exact n-volume; 0 for lower-dimensional bodies.

    Divergence theorem per facet: (1/n) * sum of offset * vol(projection) /
    |z_drop|; the facet projection volumes are computed once at hull
    construction and cached on the facets.
    """
    if p.dim < p.n:
        return Fraction(0)
    if p.n == 2:
        return _shoelace([p.vertices[i] for i in p.cycle])
    total = Fraction(0)
    for f in p.facets:
        total += Fraction(f.offset * f.proj_volume, abs(f.normal.z[f.drop]))
    return Fraction(total, p.n)


def _check_tuple(bodies: Sequence[VPolytope]) -> int:
    if not bodies:
        raise PreconditionError("empty body tuple")
    n = bodies[0].n
    if any(b.n != n for b in bodies):
        raise PreconditionError("ambient dimension mismatch")
    if len(bodies) != n:
        raise PreconditionError(f"mixed volume in R^{n} needs exactly {n} bodies")
    return n


def mixed_volume(bodies: Sequence[VPolytope]) -> Fraction:
    """Alternating sum of volumes of Minkowski sub-sums (reference route)."""
    n = _check_tuple(bodies)
    sums: dict[frozenset, VPolytope] = {}
    total = Fraction(0)
    for k in range(1, n + 1):
        sign = (-1) ** (n + k)
        for subset in itertools.combinations(range(n), k):
            key = frozenset(subset)
            if k == 1:
                sums[key] = bodies[subset[0]]
            else:
                prev = frozenset(subset[:-1])
                sums[key] = minkowski_sum(sums[prev], bodies[subset[-1]])
            total += sign * volume(sums[key])
    return Fraction(total, math.factorial(n))


def _multiset_exponents(n: int) -> list[tuple[int, ...]]:
    out = []
    for combo in itertools.combinations_with_replacement(range(n), n):
        alpha = [0] * n
        for i in combo:
            alpha[i] += 1
        out.append(tuple(alpha))
    return out


def mixed_volume_interpolated(bodies: Sequence[VPolytope]) -> Fraction:
    """Coefficient extraction from the volume polynomial of Minkowski
    combinations, on integer nodes with an exact linear solve."""
    n = _check_tuple(bodies)
    exps = _multiset_exponents(n)
    m = len(exps)

    def monomial_row(a):
        out = []
        for alpha in exps:
            v = 1
            for ai, e in zip(a, alpha):
                v *= ai ** e
            out.append(Fraction(v))
        return tuple(out)

    # greedy full-rank node selection over the lex-ordered integer grid
    nodes = []
    rows = []
    reduced: list[list[Fraction]] = []
    for a in itertools.product(range(1, n + 2), repeat=n):
        row = monomial_row(a)
        work = list(row)
        for piv in reduced:
            lead = next(i for i, x in enumerate(piv) if x != 0)
            if work[lead] != 0:
                f = work[lead] / piv[lead]
                work = [x - f * y for x, y in zip(work, piv)]
        if any(work):
            reduced.append(work)
            nodes.append(a)
            rows.append(row)
            if len(rows) == m:
                break
    assert len(rows) == m, "interpolation grid failed to reach full rank"

    rhs = []
    for a in nodes:
        scaled = [scale_translate(b, ai, (0,) * n) for ai, b in zip(a, bodies)]
        rhs.append(volume(minkowski_sum_many(scaled)))
    sol = solve_linear(rows, rhs)
    assert sol is not None
    coeffs, null = sol
    assert not null
    target = exps.index(tuple([1] * n))
    return Fraction(coeffs[target], math.factorial(n))


def mixed_volume_via_measure(bodies: Sequence[VPolytope]) -> Fraction:
    """Integral of the last support function against the mixed area measure
    of the first n-1 bodies."""
    from .area_measure import mixed_area_measure

    n = _check_tuple(bodies)
    measure = mixed_area_measure(bodies[:-1])
    last = bodies[-1]
    total = Fraction(0)
    for z, w in measure.atoms.items():
        total += support_value(last, z) * w
    return Fraction(total, n)


DiffArg = Union[VPolytope, SupportDiff]


def mixed_volume_diff(args: Sequence[DiffArg]) -> Fraction:
    """Multilinear extension of the mixed volume to differences of support
    functions, expanded over the plus/minus parts."""
    if not args:
        raise PreconditionError("empty argument tuple")
    n = args[0].n
    if len(args) != n:
        raise PreconditionError(f"needs exactly {n} arguments")
    choices = []
    for a in args:
        if isinstance(a, SupportDiff):
            choices.append(((1, a.plus), (-1, a.minus)))
        else:
            choices.append(((1, a),))
    total = Fraction(0)
    for combo in itertools.product(*choices):
        sign = 1
        tup = []
        for s, body in combo:
            sign *= s
            tup.append(body)
        total += sign * mixed_volume(tup)
    return total
