"""Exhaustive F_{q^2}-rational point counts and maximality verdicts.

A curve of genus g over F_{q^2} is maximal when it has exactly
``1 + q^2 + 2qg`` rational points.  The count here is brute force over the
three standard charts of P^2, so it is independent of the number theory in
:mod:`maxcurve.criteria` and serves as its oracle.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional

from ._intmath import is_prime
from .budget import check_budget
from .criteria import fermat_criterion, generalized_report, hurwitz_criterion
from .curves import PlaneCurve, chart_blocks, projective_points
from .errors import NoGenusFormula

__all__ = [
    "MaximalityVerdict",
    "count_points",
    "count_points_naive",
    "criterion_prediction",
    "expected_maximal_count",
    "verdict",
]

log = logging.getLogger(__name__)


def expected_maximal_count(q, g):
    return 1 + q * q + 2 * q * g


def count_points(curve: PlaneCurve, budget=None, workers=None) -> int:
    """Number of points of P^2(F_{q^2}) on the curve.

    The first chart is split into y-row blocks; with ``workers > 1`` the
    blocks are counted on a thread pool.  The total does not depend on the
    number of workers.
    """
    check_budget(curve.q, budget)

    def block_count(block):
        return int(curve.zero_mask(*block).sum())

    blocks = chart_blocks(curve.field)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(block_count, blocks))
    else:
        total = sum(block_count(b) for b in blocks)
    log.debug("%s: %d rational points", curve, total)
    return total


def count_points_naive(curve: PlaneCurve, budget=None) -> int:
    """Slow reference count: evaluate at every normalized point with FieldElement arithmetic."""
    check_budget(curve.q, budget)
    return sum(1 for P in projective_points(curve.field) if curve.is_on_curve(P))


def _fermat_converse_known(m):
    # m = n^2 - n + 1 (Hurwitz covering) or m = n^2 - nl + l^2 prime with gcd(n, l) = 1
    for n in range(1, isqrt(4 * m // 3 + 1) + 2):
        for l in range(1, n + 1):
            if n * n - n * l + l * l == m and gcd(n, l) == 1 and (l == 1 or is_prime(m)):
                return True
    return False


def criterion_prediction(curve: PlaneCurve) -> Optional[bool]:
    """What the number-theoretic criteria predict, or None when they are silent.

    Where only the "if" direction is proved (Fermat degrees outside the
    proved families, generalized curves with Q composite), a failed
    condition yields None rather than False.
    """
    F = curve.field
    p, k = F.p, F.k
    fam = curve.family
    if fam == "hermitian":
        return True
    if fam == "hurwitz":
        return hurwitz_criterion(curve.param("n"), p, k)
    if fam == "generalized":
        n, l = curve.param("n"), curve.param("l")
        if gcd(n, l) != 1:
            return None
        rep = generalized_report(n, l, p, k)
        if rep.criterion:
            return True
        return False if rep.Q_is_prime else None
    if fam == "fermat":
        m = curve.param("m")
        if fermat_criterion(m, p, k):
            return True
        return False if _fermat_converse_known(m) else None
    return None


def _model_note(curve):
    if curve.family == "generalized":
        n, l = curve.param("n"), curve.param("l")
        if gcd(n, l) == 1:
            return True, ("singular points (1:0:0), (0:1:0), (0:0:1) are unibranch and rational, "
                          "so each carries one rational point of the nonsingular model")
        return False, (f"gcd(n, l) = {gcd(n, l)} > 1: the coordinate points have several branches; "
                       "the plane count need not equal the nonsingular-model count")
    return True, "nonsingular plane curve"


@dataclass(frozen=True)
class MaximalityVerdict:
    family: str
    params: dict
    p: int
    k: int
    observed_count: int
    expected_maximal: int
    genus_used: int
    criterion_prediction: Optional[bool]
    plane_equals_model: bool
    model_note: str

    @property
    def q(self):
        return self.p**self.k

    @property
    def is_maximal(self):
        return self.observed_count == self.expected_maximal

    @property
    def hasse_weil_ok(self):
        return not self.plane_equals_model or self.observed_count <= self.expected_maximal

    @property
    def agree(self):
        """False only when a criterion makes a prediction the count contradicts."""
        return self.criterion_prediction is None or self.criterion_prediction == self.is_maximal

    @property
    def consistent(self):
        return self.agree and self.hasse_weil_ok

    def to_dict(self):
        return {
            "family": self.family,
            "params": dict(self.params),
            "p": self.p,
            "k": self.k,
            "q": self.q,
            "genus": self.genus_used,
            "observed": self.observed_count,
            "expected": self.expected_maximal,
            "maximal": self.is_maximal,
            "criterion": self.criterion_prediction,
            "agree": self.agree,
            "plane_equals_model": self.plane_equals_model,
            "note": self.model_note,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def verdict(curve: PlaneCurve, budget=None, workers=None) -> MaximalityVerdict:
    if curve.family == "custom":
        raise NoGenusFormula("verdicts need a family genus formula; custom curves have none")
    g = curve.genus()
    prediction = criterion_prediction(curve)
    observed = count_points(curve, budget=budget, workers=workers)
    same, note = _model_note(curve)
    v = MaximalityVerdict(
        family=curve.family,
        params=dict(curve.params),
        p=curve.field.p,
        k=curve.field.k,
        observed_count=observed,
        expected_maximal=expected_maximal_count(curve.q, g),
        genus_used=g,
        criterion_prediction=prediction,
        plane_equals_model=same,
        model_note=note,
    )
    if not v.consistent:
        log.warning("inconsistent verdict for %s: %s", curve, v.to_dict())
    return v
