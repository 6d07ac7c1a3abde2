"""Numerical semigroups: closure tables, gaps, and the Weierstrass semigroups
of Hurwitz and generalized Hurwitz curves at (0:1:0).

Hurwitz X_n:         generated by {s(n-1) + 1 : s = 1..n}, with n(n-1)/2 gaps.
Generalized X_{n,l}: {(n-l)s + nt : t >= 0, -(l/n)t <= s <= ((n-l)/l)t},
                     with (n^2 - nl + l^2 - 1)/2 gaps when gcd(n, l) = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from math import gcd

from ._intmath import divisors
from .errors import BadParameters, GcdNotOne, NotCoprime

__all__ = [
    "NumericalSemigroup",
    "from_generators",
    "gcd_membership_argument",
    "generalized_membership",
    "generalized_semigroup",
    "hurwitz_generators",
    "hurwitz_semigroup",
    "monomial_divisor_coefficients",
]


@dataclass(frozen=True)
class NumericalSemigroup:
    """Membership table over [0, bound]; every integer above ``bound`` is a member."""

    generators: tuple
    membership: tuple
    bound: int

    def __contains__(self, x):
        if x < 0:
            return False
        return x > self.bound or self.membership[x]

    @property
    def gaps(self):
        return [x for x, inside in enumerate(self.membership) if not inside]

    @property
    def genus(self):
        return len(self.gaps)

    @property
    def frobenius_number(self):
        gaps = self.gaps
        return gaps[-1] if gaps else -1

    @property
    def conductor(self):
        return self.frobenius_number + 1

    def members(self, upto=None):
        upto = self.bound if upto is None else upto
        return [x for x in range(upto + 1) if x in self]

    def to_dict(self):
        return {
            "generators": list(self.generators),
            "gaps": self.gaps,
            "frobenius": self.frobenius_number,
            "conductor": self.conductor,
            "genus": self.genus,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def gaps_text(self):
        return " ".join(map(str, self.gaps))


def _closure(gens, bound):
    table = [False] * (bound + 1)
    table[0] = True
    for x in range(1, bound + 1):
        table[x] = any(x >= g and table[x - g] for g in gens)
    return table


def _tail_is_full(table, run):
    # `run` consecutive members at the top imply every larger integer is a member
    return len(table) > run and all(table[-run:])


def from_generators(gens):
    """Additive closure of ``gens``; the bound grows until the conductor is certified."""
    gens = tuple(sorted(set(int(g) for g in gens)))
    if not gens or gens[0] < 1:
        raise BadParameters(f"generators must be positive integers, got {gens}")
    if reduce(gcd, gens) != 1:
        raise GcdNotOne(f"gcd{gens} != 1")
    a1 = gens[0]
    a2 = gens[1] if len(gens) > 1 else 1
    bound = max(2 * a1 * a2, 2)
    while True:
        table = _closure(gens, bound)
        if _tail_is_full(table, a1):
            return NumericalSemigroup(gens, tuple(table), bound)
        bound *= 2


def hurwitz_generators(n):
    if n < 2:
        raise BadParameters(f"n must be >= 2, got {n}")
    return tuple(s * (n - 1) + 1 for s in range(1, n + 1))


def hurwitz_semigroup(n):
    return from_generators(hurwitz_generators(n))


def _check_pair(n, l):
    if l < 1 or n <= l:
        raise BadParameters(f"need n > l >= 1, got n={n}, l={l}")
    if gcd(n, l) != 1:
        raise NotCoprime(f"gcd({n}, {l}) != 1")


def generalized_membership(n, l, x):
    """Is x = (n-l)s + nt for integers t >= 0 and -lt <= ns, ls <= (n-l)t?

    Any such pair has x >= tQ/n, so t <= xn/Q; and since gcd(n, n-l) = 1,
    t is fixed modulo n-l.  l = 1 is accepted as a cross-check against the
    Hurwitz generators.
    """
    _check_pair(n, l)
    if x < 0:
        return False
    step = n - l
    Q = n * n - n * l + l * l
    t0 = x * pow(n, -1, step) % step
    for t in range(t0, x * n // Q + 1, step):
        s = (x - n * t) // step
        if -l * t <= n * s and l * s <= step * t:
            return True
    return False


def generalized_semigroup(n, l, bound=None):
    """Table of the generalized Hurwitz set over [0, bound], default 2*Q(n, l)."""
    _check_pair(n, l)
    Q = n * n - n * l + l * l
    bound = 2 * Q if bound is None else bound
    table = [generalized_membership(n, l, x) for x in range(bound + 1)]
    smallest = next(x for x in range(1, bound + 1) if table[x])
    if not _tail_is_full(table, smallest):
        raise ValueError(f"bound {bound} does not reach the conductor for (n, l) = ({n}, {l})")
    return NumericalSemigroup((), tuple(table), bound)


def monomial_divisor_coefficients(n, l, s, t):
    """Coefficients of div(x^s y^t) at (Q2, Q0, Q1) on the generalized Hurwitz curve."""
    return (n * s + l * t, -l * s + (n - l) * t, -((n - l) * s + n * t))


def gcd_membership_argument(N, sg):
    """Smallest divisor of N that belongs to ``sg``, or None."""
    if N < 1:
        raise BadParameters(f"N must be >= 1, got {N}")
    return next((d for d in divisors(N) if d in sg), None)
