"""Criticality classification of body tuples and the positivity crosscheck.

A tuple is supercritical / critical / semicritical when every nonempty
subtuple's Minkowski sum has direction space of dimension at least the subset
size plus 2 / 1 / 0.  Subcritical means even the last bound fails.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import PreconditionError
from .geometry import VPolytope, dim_pspan
from .mixed_volume import mixed_volume

_LEVELS = {"subcritical": 0, "semicritical": 1, "critical": 2, "supercritical": 3}


@dataclass(frozen=True)
class CriticalityReport:
    classification: str
    witness: Optional[tuple[int, ...]]  # subset minimizing dim pspan - |I|
    per_subset: tuple[tuple[tuple[int, ...], int], ...]

    def at_least(self, level: str) -> bool:
        return _LEVELS[self.classification] >= _LEVELS[level]


def classify(bodies: Sequence[VPolytope]) -> CriticalityReport:
    """Exhaustive check of all nonempty subsets (the empty tuple is
    supercritical by convention)."""
    ell = len(bodies)
    if ell == 0:
        return CriticalityReport("supercritical", None, ())
    n = bodies[0].n
    if any(b.n != n for b in bodies):
        raise PreconditionError("ambient dimension mismatch")
    per = []
    min_margin = None
    witness = None
    for size in range(1, ell + 1):
        for subset in itertools.combinations(range(ell), size):
            d = dim_pspan([bodies[i] for i in subset])
            per.append((subset, d))
            margin = d - size
            if min_margin is None or margin < min_margin:
                min_margin = margin
                witness = subset
    if min_margin >= 2:
        cls = "supercritical"
    elif min_margin == 1:
        cls = "critical"
    elif min_margin == 0:
        cls = "semicritical"
    else:
        cls = "subcritical"
    return CriticalityReport(cls, witness, tuple(per))


@dataclass(frozen=True)
class AppendReport:
    base_class: str
    appended_class: str
    dim_extra: int
    predicted_semicritical: Optional[bool]  # from a critical base
    predicted_critical: Optional[bool]  # from a supercritical base
    consistent: bool


def check_append_rules(bodies: Sequence[VPolytope], extra: VPolytope) -> AppendReport:
    """Compare the append rules' predictions with a recomputed classification:
    critical + dim >= 1 extra gives semicritical, supercritical + dim >= 2
    extra gives critical (both are equivalences)."""
    base = classify(bodies)
    appended = classify(list(bodies) + [extra])
    d_extra = dim_pspan([extra])
    pred_semi = None
    pred_crit = None
    ok = True
    if base.at_least("critical"):
        pred_semi = d_extra >= 1
        ok = ok and (appended.at_least("semicritical") == pred_semi)
    if base.at_least("supercritical"):
        pred_crit = d_extra >= 2
        ok = ok and (appended.at_least("critical") == pred_crit)
    return AppendReport(base.classification, appended.classification,
                        d_extra, pred_semi, pred_crit, ok)


def positivity_crosscheck(bodies: Sequence[VPolytope]) -> bool:
    """Semicriticality of an n-tuple is equivalent to positive mixed volume;
    returns whether the equivalence holds (it must, or the build is broken)."""
    semi = classify(bodies).at_least("semicritical")
    positive = mixed_volume(bodies) > 0
    return semi == positive
