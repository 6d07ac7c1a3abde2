"""Degree and genus bounds for plane maximal curves, in exact arithmetic.

Irrational bounds are kept as ``a + b*sqrt(r)`` with rational a, b, r and
compared against integers, rationals and each other by isolating radicals
and squaring with attention to signs.  Floats only appear in display output.

Every surd bound here is the larger (or smaller) root of a quadratic in the
degree d; :meth:`QuadraticSurdBound.is_root_of` checks that exactly.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt

from ._intmath import prime_power
from .errors import BadParameters, NegativeDiscriminant, NotApplicable

__all__ = [
    "Interval",
    "QuadraticSurdBound",
    "F_Mq",
    "F_bound",
    "Fprime_Mq",
    "G_bound",
    "admissible_degrees",
    "d1",
    "d2",
    "d3",
    "d4",
    "d4pq",
    "d5",
    "delta_M",
    "genus_exclusion_interval",
    "ladder",
]


def _sign(x):
    return (x > 0) - (x < 0)


def _sign_surd(u, b, r):
    """Sign of u + b*sqrt(r), r >= 0, exactly."""
    if b == 0 or r == 0:
        return _sign(u)
    sb, su = _sign(b), _sign(u)
    if su == 0 or su == sb:
        return sb
    diff = b * b * r - u * u
    return sb if diff > 0 else su if diff < 0 else 0


def _sign_two(A, B, r, C, s):
    """Sign of A + B*sqrt(r) + C*sqrt(s), exactly."""
    sx = _sign_surd(A, B, r)
    sy = _sign(C) if s else 0
    if sy == 0 or sx == sy:
        return sx if sx else sy
    if sx == 0:
        return sy
    # opposite signs: compare squares, X^2 - Y^2 = A^2 + B^2 r - C^2 s + 2AB sqrt(r)
    d = _sign_surd(A * A + B * B * r - C * C * s, 2 * A * B, r)
    return sx if d > 0 else sy if d < 0 else 0


@dataclass(frozen=True)
class QuadraticSurdBound:
    """The real number a + b*sqrt(r)."""

    a: Fraction
    b: Fraction
    r: Fraction

    def __post_init__(self):
        for name in ("a", "b", "r"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.r < 0:
            raise NegativeDiscriminant(f"negative radicand {self.r}")
        r = self.r
        root_n, root_d = isqrt(r.numerator), isqrt(r.denominator)
        if root_n * root_n == r.numerator and root_d * root_d == r.denominator:
            object.__setattr__(self, "a", self.a + self.b * Fraction(root_n, root_d))
            object.__setattr__(self, "b", Fraction(0))
        if self.b == 0 or self.r == 0:
            object.__setattr__(self, "b", Fraction(0))
            object.__setattr__(self, "r", Fraction(0))

    @classmethod
    def root(cls, numer_rational, radicand, denom, sign=1):
        """(numer_rational + sign*sqrt(radicand)) / denom."""
        denom = Fraction(denom)
        if denom == 0:
            raise BadParameters("zero denominator")
        return cls(Fraction(numer_rational) / denom, Fraction(sign) / denom, radicand)

    def _cmp(self, other):
        if isinstance(other, QuadraticSurdBound):
            return _sign_two(self.a - other.a, self.b, self.r, -other.b, other.r)
        if isinstance(other, (int, Fraction)):
            return _sign_surd(self.a - other, self.b, self.r)
        return NotImplemented

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __eq__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c == 0

    def __hash__(self):
        return hash((self.a, self.b, self.r))

    def is_root_of(self, A, B, C):
        """Exactly: A x^2 + B x + C == 0 at x = self."""
        a, b, r = self.a, self.b, self.r
        rational = A * (a * a + b * b * r) + B * a + C
        radical = 2 * A * a * b + B * b
        return _sign_surd(rational, radical, r) == 0

    def floor(self):
        guess = floor(float(self))
        while self < guess:
            guess -= 1
        while self >= guess + 1:
            guess += 1
        return guess

    def to_decimal(self, digits=50):
        with decimal.localcontext() as ctx:
            ctx.prec = digits + 10
            to_dec = lambda f: decimal.Decimal(f.numerator) / decimal.Decimal(f.denominator)
            return to_dec(self.a) + to_dec(self.b) * to_dec(self.r).sqrt()

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.r) ** 0.5

    def approx(self, digits=12):
        """Decimal string with ``digits`` significant digits (display only)."""
        with decimal.localcontext() as ctx:
            ctx.prec = digits
            return str(+self.to_decimal(digits + 5))

    def triple(self):
        return (self.a, self.b, self.r)

    def __str__(self):
        if not self.b:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.r})"


def _prime_power_of(p, q):
    pk = prime_power(q)
    if pk is None or pk[0] != p:
        raise BadParameters(f"{q} is not a power of the prime {p}")
    return pk[1]


# -- the ladder ---------------------------------------------------------------

def d1(q):
    """(3 + sqrt(2(q-3)(q+1) + 9)) / 2."""
    return QuadraticSurdBound.root(3, 2 * (q - 3) * (q + 1) + 9, 2)


def F_bound(q):
    """(q^2 + 2q + 1) / (2q - 1)."""
    return Fraction(q * q + 2 * q + 1, 2 * q - 1)


def d2(q):
    if q < 3:
        raise NotApplicable(f"d2 needs q >= 3, got {q}")
    if q == 3:
        return 3
    if q == 5:
        return 4
    return (q + 2) // 2


@dataclass(frozen=True)
class Interval:
    """Half-open interval (lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __contains__(self, g):
        return self.lo < g <= self.hi

    def __str__(self):
        return f"({self.lo}, {self.hi}]"


def genus_exclusion_interval(q):
    """Genera that no plane maximal curve over F_{q^2} can have, for q >= 4, q != 5."""
    if q < 4 or q == 5:
        raise NotApplicable(f"no exclusion interval for q={q}")
    if q % 2 == 0:
        return Interval(Fraction(q * (q - 2), 8), Fraction(q * (q - 2), 4))
    return Interval(Fraction((q - 1) * (q - 3), 8), Fraction((q - 1) ** 2, 4))


def delta_M(M, q):
    """Discriminant of (Mq-1)d^2 - (q^2+3Mq-1)d + M(q+1)^2."""
    return (q**4 - (4 * M * M - 6 * M) * q**3 + (M * M + 4 * M - 2) * q * q
            - (4 * M * M - 2 * M) * q + 4 * M + 1)


def _FMq(M, q, sign):
    disc = delta_M(M, q)
    if disc < 0:
        raise NegativeDiscriminant(f"Delta_{M}({q}) = {disc} < 0")
    return QuadraticSurdBound.root(q * q + 3 * M * q - 1, disc, 2 * (M * q - 1), sign)


def F_Mq(M, q):
    return _FMq(M, q, 1)


def Fprime_Mq(M, q):
    return _FMq(M, q, -1)


def d3(p, q):
    v = _prime_power_of(p, q)
    if p == 2:
        if q in (64, 128, 256):
            return q // 4 - 1
        if q >= 512:
            return q // 4
    elif v >= 3:
        return q // p - p + 2
    raise NotApplicable(f"d3 is not defined for p={p}, q={q}")


def _check_large(q):
    if not (q == 8 or q >= 11):
        raise NotApplicable(f"needs q = 8 or q >= 11, got q={q}")


def d4(q):
    """Larger root of (5q-10)d^2 - (2q^2+15q-20)d + 5(q+1)^2."""
    _check_large(q)
    return QuadraticSurdBound.root(2 * q * q + 15 * q - 20,
                                   4 * q**4 - 40 * q**3 + 145 * q * q - 300 * q + 600,
                                   10 * (q - 2))


def d4pq(p, q):
    """Larger root of (5q - q/p - 6)d^2 - (2q^2 + 15q - 3q/p - 8)d + 5(q+1)^2, q = p^v, v >= 2."""
    if _prime_power_of(p, q) < 2:
        raise NotApplicable(f"d4(p, q) needs q = p^v with v >= 2, got q={q}")
    c = 5 - Fraction(1, p)
    radicand = (4 * q**4 - 8 * c * q**3 + (113 - Fraction(50, p) + Fraction(9, p * p)) * q * q
                - 4 * (25 - Fraction(17, p)) * q + 184)
    return QuadraticSurdBound.root(2 * q * q + 3 * c * q - 8, radicand, 2 * c * q - 12)


def d5(p, q):
    _check_large(q)
    return d4(q) if _prime_power_of(p, q) == 1 else d4pq(p, q)


def G_bound(q):
    """Larger root of (5q-12)d^2 - (q^2+15q-31)d + 5(q+1)^2; undefined while the radicand is negative."""
    _check_large(q)
    return QuadraticSurdBound.root(q * q + 15 * q - 31,
                                   q**4 - 70 * q**3 + 203 * q * q - 550 * q + 1201,
                                   2 * (5 * q - 12))


def admissible_degrees(p, q):
    """Degrees 3 <= d <= q+1 that a plane F_{q^2}-maximal curve may have."""
    _prime_power_of(p, q)
    top = d1(q)
    out = set()
    for d in range(3, q + 2):
        if d == q + 1:
            out.add(d)
            continue
        if d > top:
            continue
        if q >= 3 and d > d2(q):
            continue
        if (q == 8 or q >= 11) and not (d <= d5(p, q) or d == (q + 2) // 2):
            continue
        out.add(d)
    return out


def ladder(q):
    """Every bound that applies at q, keyed by name; None where undefined."""
    pk = prime_power(q)
    if pk is None:
        raise BadParameters(f"{q} is not a prime power")
    p, _ = pk

    def attempt(fn, *args):
        try:
            return fn(*args)
        except NotApplicable:
            return None

    return {
        "q": q,
        "p": p,
        "d1": d1(q),
        "F": F_bound(q),
        "d2": attempt(d2, q),
        "d3": attempt(d3, p, q),
        "d4": attempt(d4, q),
        "d4pq": attempt(d4pq, p, q),
        "d5": attempt(d5, p, q),
        "G": attempt(G_bound, q),
        "interval": attempt(genus_exclusion_interval, q),
    }
