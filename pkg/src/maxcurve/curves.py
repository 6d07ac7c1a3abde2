"""Plane curve families over F_{q^2} and their genus data.

Curves are sparse homogeneous polynomials in X, Y, Z.  The named families
are

* Hermitian      X^{q+1} + Y^{q+1} + Z^{q+1}
* Hurwitz n      X^n Y + Y^n Z + Z^n X,              p does not divide n^2-n+1
* generalized    X^n Y^l + Y^n Z^l + Z^n X^l,        n >= l >= 2, p does not divide n^2-nl+l^2
* Fermat m       X^m + Y^m + Z^m,                    p does not divide m
* custom         any homogeneous polynomial (no genus formula)

Points are enumerated in three charts, in this fixed order: (1:y:z) with y
outer and z inner, then (0:1:z), then (0:0:1).  Each projective point is
visited exactly once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

import numpy as np

from .budget import check_budget
from .errors import (
    BadParameters,
    CharacteristicDividesM,
    CharacteristicDividesQ,
    MixedFields,
    NoGenusFormula,
)
from .finite_field import FieldDescriptor, FieldElement, field_create

__all__ = [
    "FAMILIES",
    "PlaneCurve",
    "ProjectivePoint",
    "chart_blocks",
    "delta_invariant",
    "genus_generalized_hurwitz",
    "genus_nonsingular_plane",
    "make_custom",
    "make_curve",
    "make_fermat",
    "make_generalized",
    "make_hermitian",
    "make_hurwitz",
    "projective_points",
    "rational_points",
    "singular_locus",
]

FAMILIES = ("hermitian", "hurwitz", "generalized", "fermat", "custom")


def genus_nonsingular_plane(d):
    if d < 1:
        raise BadParameters(f"degree must be >= 1, got {d}")
    return (d - 1) * (d - 2) // 2


def _check_nl(n, l):
    if not (isinstance(n, int) and isinstance(l, int)) or l < 2 or n < l:
        raise BadParameters(f"need n >= l >= 2, got n={n}, l={l}")


def delta_invariant(n, l):
    """delta-invariant at each coordinate point of X^n Y^l + Y^n Z^l + Z^n X^l."""
    _check_nl(n, l)
    twice = n * l - n - l + gcd(n, l)
    assert twice % 2 == 0
    return twice // 2


def genus_generalized_hurwitz(n, l):
    _check_nl(n, l)
    twice = n * n - n * l + l * l + 2 - 3 * gcd(n, l)
    assert twice % 2 == 0
    return twice // 2


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of P^2 whose first nonzero coordinate is 1."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 3 or not any(self.coords):
            raise ValueError("a projective point needs three coordinates, not all zero")
        lead = next(c for c in self.coords if c)
        if lead != lead.field.one:
            raise ValueError("coordinates are not normalized; use ProjectivePoint.normalize")

    @classmethod
    def normalize(cls, x, y, z):
        F = x.field
        if y.field != F or z.field != F:
            raise MixedFields("point coordinates from different fields")
        lead = next((c for c in (x, y, z) if c), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        s = lead.inv()
        return cls((x * s, y * s, z * s))

    @classmethod
    def from_indices(cls, F, i, j, k):
        return cls.normalize(F.from_index(int(i)), F.from_index(int(j)), F.from_index(int(k)))

    @property
    def field(self):
        return self.coords[0].field

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def projective_points(F):
    """All points of P^2(F) in chart order, as ProjectivePoint objects."""
    one, zero = F.one, F.zero
    elems = list(F.elements())
    for y in elems:
        for z in elems:
            yield ProjectivePoint((one, y, z))
    for z in elems:
        yield ProjectivePoint((zero, one, z))
    yield ProjectivePoint((zero, zero, one))


def chart_blocks(F, max_cells=2**21):
    """Yield (X, Y, Z) index arrays covering P^2(F) once, in chart order.

    The first chart is split into row blocks over y so each block holds at
    most ``max_cells`` points; the blocks are independent and can be handed
    to separate workers.
    """
    n = F.order
    allz = np.arange(n, dtype=np.int64)
    rows = max(1, max_cells // n)
    one = np.int64(1)
    zero = np.int64(0)
    for start in range(0, n, rows):
        ys = np.arange(start, min(n, start + rows), dtype=np.int64)
        yield np.full((1, 1), one), ys[:, None], allz[None, :]
    yield np.full(1, zero), np.full(1, one), allz
    yield np.array([0]), np.array([0]), np.array([1])


@dataclass(frozen=True)
class PlaneCurve:
    """A homogeneous polynomial sum(c * X^i Y^j Z^k) with family metadata.

    ``terms`` holds (i, j, k, coefficient) with nonzero FieldElement
    coefficients; ``params`` is a tuple of (name, value) pairs.
    """

    family: str
    params: tuple
    field: FieldDescriptor
    terms: tuple
    degree: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadParameters(f"unknown family {self.family!r}")
        for i, j, k, c in self.terms:
            if min(i, j, k) < 0 or i + j + k != self.degree:
                raise BadParameters(f"monomial exponents {(i, j, k)} do not sum to degree {self.degree}")
            if not isinstance(c, FieldElement) or c.field != self.field:
                raise MixedFields("coefficient is not an element of the curve's field")
            if not c:
                raise BadParameters("zero coefficient in term list")

    def param(self, name):
        return dict(self.params)[name]

    @property
    def q(self):
        return self.field.q

    def genus(self):
        fam = self.family
        if fam == "hermitian":
            return self.q * (self.q - 1) // 2
        if fam in ("hurwitz", "fermat"):
            return genus_nonsingular_plane(self.degree)
        if fam == "generalized":
            return genus_generalized_hurwitz(self.param("n"), self.param("l"))
        raise NoGenusFormula("custom curves carry no genus formula")

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point):
        x, y, z = point
        F = self.field
        for c in (x, y, z):
            if c.field != F:
                raise MixedFields(f"point over {c.field} evaluated on a curve over {F}")
        total = F.zero
        for i, j, k, c in self.terms:
            total = total + c * x**i * y**j * z**k
        return total

    def is_on_curve(self, point):
        return not self.evaluate(point)

    def partial(self, var):
        """Formal partial derivative in variable 0 (X), 1 (Y) or 2 (Z)."""
        out = []
        for term in self.terms:
            e = term[var]
            c = term[3] * (e % self.field.p)
            if e and c:
                exps = list(term[:3])
                exps[var] -= 1
                out.append((*exps, c))
        return PlaneCurve("custom", (), self.field, tuple(out), max(self.degree - 1, 0))

    def zero_mask(self, X, Y, Z):
        """Vectorized test F(X, Y, Z) == 0 on broadcastable index arrays."""
        shape = np.broadcast_shapes(np.shape(X), np.shape(Y), np.shape(Z))
        if not self.terms:
            return np.ones(shape, dtype=bool)
        T = self.field.tables
        group = self.field.order - 1
        values = []
        for i, j, k, c in self.terms:
            lg = np.int64(T.log[c.index])
            zero = np.zeros((), dtype=bool)
            for e, A in ((i, X), (j, Y), (k, Z)):
                if e == 0:
                    continue
                la = T.log[A]
                zero = zero | (la < 0)
                lg = lg + (e % group) * la
            values.append(np.where(zero, 0, T.exp[lg % group]))
        return np.broadcast_to(T.is_zero_sum(values), shape)

    # -- serialization -----------------------------------------------------

    def to_text(self):
        """Canonical 'family:params:p:k' string (custom curves use to_json)."""
        if self.family == "custom":
            raise ValueError("custom curves serialize through to_json()")
        params = ",".join(str(v) for _, v in self.params)
        return f"{self.family}:{params}:{self.field.p}:{self.field.k}"

    def to_dict(self):
        d = {
            "family": self.family,
            "params": dict(self.params),
            "p": self.field.p,
            "k": self.field.k,
            "degree": self.degree,
        }
        if self.family == "custom":
            d["terms"] = [[i, j, k, list(c.coeffs)] for i, j, k, c in self.terms]
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_text(cls, text):
        try:
            family, params, p, k = text.split(":")
            values = [int(v) for v in params.split(",") if v]
            F = field_create(int(p), int(k))
        except ValueError as exc:
            raise BadParameters(f"cannot parse curve spec {text!r}: {exc}") from None
        names = {"hermitian": (), "hurwitz": ("n",), "generalized": ("n", "l"), "fermat": ("m",)}
        if family not in names:
            raise BadParameters(f"unknown family {family!r} in {text!r}")
        if len(values) != len(names[family]):
            raise BadParameters(f"{family} expects parameters {names[family]}, got {values}")
        return make_curve(family, F, **dict(zip(names[family], values)))

    @classmethod
    def from_dict(cls, d):
        F = field_create(int(d["p"]), int(d["k"]))
        if d["family"] == "custom":
            terms = [(i, j, k, F(c)) for i, j, k, c in d["terms"]]
            return make_custom(terms, F)
        return make_curve(d["family"], F, **{key: int(v) for key, v in d.get("params", {}).items()})

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __str__(self):
        params = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({params}) over {self.field}"


def _three_term(family, params, F, exps):
    one = F.one
    degree = sum(exps[0])
    return PlaneCurve(family, params, F, tuple((*e, one) for e in exps), degree)


def make_hermitian(F):
    e = F.q + 1
    return _three_term("hermitian", (), F, [(e, 0, 0), (0, e, 0), (0, 0, e)])


def make_hurwitz(n, F):
    if not isinstance(n, int) or n < 2:
        raise BadParameters(f"Hurwitz curves need n >= 2, got {n}")
    m = n * n - n + 1
    if m % F.p == 0:
        raise CharacteristicDividesQ(f"p={F.p} divides n^2-n+1 = {m}")
    return _three_term("hurwitz", (("n", n),), F, [(n, 1, 0), (0, n, 1), (1, 0, n)])


def make_generalized(n, l, F):
    """X^n Y^l + Y^n Z^l + Z^n X^l; l == 1 is routed to make_hurwitz."""
    if l == 1:
        return make_hurwitz(n, F)
    _check_nl(n, l)
    Q = n * n - n * l + l * l
    if Q % F.p == 0:
        raise CharacteristicDividesQ(f"p={F.p} divides n^2-nl+l^2 = {Q}")
    return _three_term("generalized", (("n", n), ("l", l)), F,
                       [(n, l, 0), (0, n, l), (l, 0, n)])


def make_fermat(m, F):
    if not isinstance(m, int) or m < 1:
        raise BadParameters(f"Fermat curves need m >= 1, got {m}")
    if m % F.p == 0:
        raise CharacteristicDividesM(f"p={F.p} divides m={m}")
    return _three_term("fermat", (("m", m),), F, [(m, 0, 0), (0, m, 0), (0, 0, m)])


def make_custom(terms, F):
    """Arbitrary homogeneous polynomial; like terms are merged, zeros dropped."""
    merged = {}
    for i, j, k, c in terms:
        key = (int(i), int(j), int(k))
        merged[key] = merged.get(key, F.zero) + F(c)
    clean = tuple((*key, c) for key, c in sorted(merged.items()) if c)
    if not clean:
        raise BadParameters("the zero polynomial does not define a curve")
    degrees = {sum(key[:3]) for key in clean}
    if len(degrees) != 1:
        raise BadParameters(f"polynomial is not homogeneous (degrees {sorted(degrees)})")
    return PlaneCurve("custom", (), F, clean, degrees.pop())


def make_curve(family, F, **params):
    if family == "hermitian":
        return make_hermitian(F)
    if family == "hurwitz":
        return make_hurwitz(params["n"], F)
    if family == "generalized":
        return make_generalized(params["n"], params["l"], F)
    if family == "fermat":
        return make_fermat(params["m"], F)
    raise BadParameters(f"cannot build family {family!r} from parameters")


def _masked_points(F, mask_fn, budget):
    check_budget(F.q, budget)
    found = []
    for X, Y, Z in chart_blocks(F):
        mask = mask_fn(X, Y, Z)
        idx = np.nonzero(mask)
        Xb, Yb, Zb = (np.broadcast_to(A, mask.shape)[idx] for A in (X, Y, Z))
        found.extend(zip(Xb.tolist(), Yb.tolist(), Zb.tolist()))
    return [ProjectivePoint.from_indices(F, *t) for t in found]


def rational_points(curve, budget=None):
    """All F_{q^2}-rational points of the plane model, in chart order."""
    return _masked_points(curve.field, curve.zero_mask, budget)


def singular_locus(curve, budget=None):
    """Rational points where F and its three formal partials all vanish."""
    partials = [curve.partial(v) for v in range(3)]

    def mask(X, Y, Z):
        m = curve.zero_mask(X, Y, Z)
        for d in partials:
            m = m & d.zero_mask(X, Y, Z)
        return m

    return _masked_points(curve.field, mask, budget)
