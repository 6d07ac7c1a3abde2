"""Explicit covering maps between the curve families, checked point by point.

* Fermat F_{n^2-n+1} -> Hurwitz X_n:       (u:v:1) -> (u^n v^-1 : u v^(n-1) : 1)
* Fermat F_{Q(n,l)}  -> generalized X_{n,l}: (u:v:1) -> (u^n v^-l : u^l v^(n-l) : 1)
* Hermitian          -> Fermat F_m, m | q+1:  (x:y:z) -> (x^e : y^e : z^e), e = (q+1)/m

The first two are only claimed on the affine chart W = 1 away from v = 0.
Domain points outside that open set are counted as excluded, not extended.
In the generalized map the second exponent is l (the l = 1 case recovers the
Hurwitz map).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .curves import PlaneCurve, ProjectivePoint, make_fermat, rational_points
from .errors import DivisibilityFails, IncompatibleParameters, UndefinedAtPoint

__all__ = [
    "MAPS",
    "CoveringReport",
    "fermat_to_generalized_map",
    "fermat_to_hurwitz_map",
    "intermediate_fermat",
    "hermitian_to_fermat_map",
    "verify_covering",
]

MAPS = ("fermat-hurwitz", "fermat-generalized", "hermitian-fermat",
        "hermitian-hurwitz", "hermitian-generalized")


def fermat_to_generalized_map(u, v, n, l):
    if not v:
        raise UndefinedAtPoint("map needs v != 0")
    return u**n * v ** (-l), u**l * v ** (n - l)


def fermat_to_hurwitz_map(u, v, n):
    return fermat_to_generalized_map(u, v, n, 1)


def hermitian_to_fermat_map(P, q, m):
    if (q + 1) % m:
        raise DivisibilityFails(f"{m} does not divide q+1 = {q + 1}")
    e = (q + 1) // m
    return ProjectivePoint.normalize(*(c**e for c in P))


@dataclass(frozen=True)
class CoveringReport:
    domain: str
    target: str
    map_id: str
    points_checked: int
    points_on_target: int
    excluded: int
    image_size: int

    @property
    def ok(self):
        return self.points_on_target == self.points_checked

    def to_dict(self):
        return {**asdict(self), "ok": self.ok}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def _nl(curve):
    if curve.family == "hurwitz":
        return curve.param("n"), 1
    if curve.family == "generalized":
        return curve.param("n"), curve.param("l")
    raise IncompatibleParameters(f"{curve} is not a Hurwitz-type curve")


def _infer_map(domain, target):
    fam = (domain.family, target.family)
    table = {
        ("fermat", "hurwitz"): "fermat-hurwitz",
        ("fermat", "generalized"): "fermat-generalized",
        ("hermitian", "fermat"): "hermitian-fermat",
        ("hermitian", "hurwitz"): "hermitian-hurwitz",
        ("hermitian", "generalized"): "hermitian-generalized",
    }
    if fam not in table:
        raise IncompatibleParameters(f"no covering map from {domain.family} to {target.family}")
    return table[fam]


def _affine_map(n, l):
    """Projective point -> image point via the affine Fermat map, or None if undefined."""

    def apply(P):
        U, V, W = P
        if not W:
            return None
        u, v = U / W, V / W
        if not v:
            return None
        x, y = fermat_to_generalized_map(u, v, n, l)
        return ProjectivePoint.normalize(x, y, W.field.one)

    return apply


def _build_map(map_id, domain, target):
    q = domain.q
    if map_id == "hermitian-fermat":
        m = target.param("m")
        if (q + 1) % m:
            raise DivisibilityFails(f"{m} does not divide q+1 = {q + 1}")
        return lambda P: hermitian_to_fermat_map(P, q, m)
    if map_id in ("fermat-hurwitz", "fermat-generalized"):
        n, l = _nl(target)
        m = domain.param("m")
        if m != n * n - n * l + l * l:
            raise IncompatibleParameters(f"Fermat degree {m} != n^2-nl+l^2 for (n, l) = ({n}, {l})")
        return _affine_map(n, l)
    # two-step: Hermitian -> Fermat(Q) -> target
    n, l = _nl(target)
    m = n * n - n * l + l * l
    if (q + 1) % m:
        raise DivisibilityFails(f"{m} does not divide q+1 = {q + 1}")
    second = _affine_map(n, l)
    return lambda P: second(hermitian_to_fermat_map(P, q, m))


def _expected_domain(map_id):
    return "hermitian" if map_id.startswith("hermitian") else "fermat"


def verify_covering(domain: PlaneCurve, map_id, target: PlaneCurve, budget=None) -> CoveringReport:
    """Push every rational point of ``domain`` through the map and test the image."""
    if domain.field != target.field:
        raise IncompatibleParameters("domain and target live over different fields")
    map_id = map_id or _infer_map(domain, target)
    if map_id not in MAPS:
        raise IncompatibleParameters(f"unknown map {map_id!r}")
    if domain.family != _expected_domain(map_id) or _infer_map(domain, target) != map_id:
        raise IncompatibleParameters(f"map {map_id} does not go from {domain.family} to {target.family}")
    fn = _build_map(map_id, domain, target)

    checked = on_target = excluded = 0
    image = set()
    for P in rational_points(domain, budget=budget):
        Y = fn(P)
        if Y is None:
            excluded += 1
            continue
        checked += 1
        image.add(Y)
        on_target += target.is_on_curve(Y)
    return CoveringReport(str(domain), str(target), map_id, checked, on_target, excluded, len(image))


def intermediate_fermat(target: PlaneCurve) -> PlaneCurve:
    """The Fermat curve of degree n^2 - nl + l^2 sitting between Hermitian and ``target``."""
    n, l = _nl(target)
    return make_fermat(n * n - n * l + l * l, target.field)
