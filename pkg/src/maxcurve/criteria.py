"""Number-theoretic maximality criteria and the congruence toolkit behind them.

For q = p^k:

* Hurwitz X_n is F_{q^2}-maximal  iff  (n^2 - n + 1) | (q + 1).
* Generalized X_{n,l} (gcd(n, l) = 1, Q = n^2 - nl + l^2 prime) is maximal
  iff Q | (q + 1).  Without primality of Q only the "if" direction holds.
* Fermat F_m is maximal when m | (q + 1); the converse is proved for
  m = n^2 - n + 1 and for m = Q(n, l) prime.

The generalized criterion is sometimes printed as ``Q = 0 (mod q + 1)``.
That orientation contradicts the Hurwitz case at l = 1, and the argument
that proves the criterion forces Q | q + 1.  :func:`generalized_report`
evaluates both readings so a disagreement is visible.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from math import gcd
from typing import NamedTuple, Optional

from ._intmath import divisors, factorize, is_prime
from .errors import (
    BadParameters,
    CharacteristicDividesM,
    CharacteristicDividesQ,
    EvenOrNonPrimeModulus,
    NotCoprime,
    NotPrime,
)

__all__ = [
    "CongruenceSolution",
    "GeneralizedReport",
    "HypothesisCheck",
    "OrderExponent",
    "admissible_exponent_residues",
    "cor34_case1",
    "cor34_case2",
    "euler_phi",
    "fermat_criterion",
    "gcd",
    "generalized_criterion",
    "generalized_report",
    "hurwitz_criterion",
    "hurwitz_modulus",
    "is_prime",
    "legendre_symbol",
    "multiplicative_order",
    "rem301_order_exponent",
    "residue_table_csv",
    "residue_table_json",
]


def _require_prime(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def euler_phi(m):
    if m < 1:
        raise BadParameters(f"phi is defined for m >= 1, got {m}")
    out = m
    for r in factorize(m):
        out = out // r * (r - 1)
    return out


def multiplicative_order(a, m):
    """Least e >= 1 with a^e = 1 (mod m)."""
    if m < 1:
        raise BadParameters(f"modulus must be positive, got {m}")
    if gcd(a, m) != 1:
        raise NotCoprime(f"gcd({a}, {m}) != 1")
    if m == 1:
        return 1
    for e in divisors(euler_phi(m)):
        if pow(a, e, m) == 1:
            return e
    raise AssertionError("unreachable by Euler's theorem")


def legendre_symbol(a, p):
    """(a/p) in {-1, 0, 1} by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise EvenOrNonPrimeModulus(f"{p} is not an odd prime")
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def hurwitz_modulus(n):
    return n * n - n + 1


def hurwitz_criterion(n, p, k):
    """True iff the Hurwitz curve X_n is F_{q^2}-maximal, q = p^k."""
    _require_prime(p)
    m = hurwitz_modulus(n)
    if m % p == 0:
        raise CharacteristicDividesQ(f"p={p} divides n^2-n+1 = {m}")
    return (p**k + 1) % m == 0


@dataclass(frozen=True)
class GeneralizedReport:
    n: int
    l: int
    p: int
    k: int
    Q: int
    q_plus_1: int
    Q_is_prime: bool
    Q_divides_q_plus_1: bool
    q_plus_1_divides_Q: bool

    @property
    def readings_differ(self):
        return self.Q_divides_q_plus_1 != self.q_plus_1_divides_Q

    @property
    def criterion(self):
        return self.Q_divides_q_plus_1


def generalized_report(n, l, p, k):
    """Evaluate the generalized Hurwitz criterion and its hypotheses."""
    _require_prime(p)
    if l < 1 or n < l:
        raise BadParameters(f"need n >= l >= 1, got n={n}, l={l}")
    if gcd(n, l) != 1:
        raise NotCoprime(f"gcd({n}, {l}) != 1")
    Q = n * n - n * l + l * l
    if Q % p == 0:
        raise CharacteristicDividesQ(f"p={p} divides n^2-nl+l^2 = {Q}")
    q1 = p**k + 1
    return GeneralizedReport(n, l, p, k, Q, q1, is_prime(Q), q1 % Q == 0, Q % q1 == 0)


def generalized_criterion(n, l, p, k):
    """True iff Q(n, l) divides q + 1 (the maximality condition for X_{n,l})."""
    if l < 2:
        raise BadParameters(f"generalized Hurwitz curves need l >= 2, got {l}")
    return generalized_report(n, l, p, k).criterion


def fermat_criterion(m, p, k):
    """True iff m divides q + 1."""
    _require_prime(p)
    if m < 1:
        raise BadParameters(f"m must be >= 1, got {m}")
    if m % p == 0:
        raise CharacteristicDividesM(f"p={p} divides m={m}")
    return (p**k + 1) % m == 0


@dataclass(frozen=True)
class CongruenceSolution:
    """Units x mod m with x^w = -1 (mod m)."""

    m: int
    w: int
    residues: tuple

    def __post_init__(self):
        for x in self.residues:
            if gcd(x, self.m) != 1 or (pow(x, self.w, self.m) + 1) % self.m:
                raise ValueError(f"{x} does not solve X^{self.w} + 1 = 0 (mod {self.m})")


def admissible_exponent_residues(m):
    """For each w in 1..phi(m), the units x with x^w = -1 (mod m).

    With q = p^(phi(m)*v + w), the condition m | q + 1 holds exactly when
    p mod m lies in the class-w set.  Empty classes are kept.
    """
    if m < 2:
        raise BadParameters(f"m must be >= 2, got {m}")
    units = [x for x in range(1, m) if gcd(x, m) == 1]
    return [
        CongruenceSolution(m, w, tuple(x for x in units if pow(x, w, m) == m - 1))
        for w in range(1, euler_phi(m) + 1)
    ]


def residue_table_csv(solutions):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "w", "residues"])
    for s in solutions:
        writer.writerow([s.m, s.w, " ".join(map(str, s.residues))])
    return buf.getvalue()


def residue_table_json(solutions):
    return json.dumps([{**asdict(s), "residues": list(s.residues)} for s in solutions],
                      sort_keys=True)


def cor34_case1(p, e):
    """n = p^e: X_n is maximal for q = p^(phi(m) v + 3e).

    Returns (m, w) with w the exponent class of 3e in 1..phi(m), after
    checking p^{3e} + 1 = (p^e + 1) m and the Hurwitz criterion at k = 3e.
    """
    _require_prime(p)
    if e < 1:
        raise BadParameters(f"e must be >= 1, got {e}")
    n = p**e
    m = hurwitz_modulus(n)
    if p ** (3 * e) + 1 != (n + 1) * m:
        raise AssertionError("cube-sum factorization failed")
    if not hurwitz_criterion(n, p, 3 * e):
        raise AssertionError(f"Hurwitz criterion fails for n={n}, q={p}^{3 * e}")
    phi = euler_phi(m)
    return m, (3 * e) % phi or phi


class HypothesisCheck(NamedTuple):
    exponent: Optional[int]
    failed: Optional[str]


def cor34_case2(p, n):
    """p = 3 (mod 4), n = 0 or 1 (mod p), m prime, m = 3 (mod 4)  =>  exponent (m-1)/2.

    Hypotheses are checked, not assumed.  When one fails the exponent is None
    and ``failed`` names it.
    """
    m = hurwitz_modulus(n)
    if not is_prime(p):
        return HypothesisCheck(None, "p prime")
    if p % 4 != 3:
        return HypothesisCheck(None, "p ≡ 3 (mod 4)")
    if n % p not in (0, 1):
        return HypothesisCheck(None, "n ≡ 0,1 (mod p)")
    if not is_prime(m):
        return HypothesisCheck(None, "m prime")
    if m % 4 != 3:
        return HypothesisCheck(None, "m ≡ 3 (mod 4)")
    half = (m - 1) // 2
    if pow(p, half, m) != m - 1:
        raise AssertionError(f"p^((m-1)/2) != -1 (mod {m}) although all hypotheses hold")
    return HypothesisCheck(half, None)


class OrderExponent(NamedTuple):
    order: int
    exponent: Optional[int]
    zero_divisors: bool


def rem301_order_exponent(p, m):
    """If p has even order 2i mod m and p^i = -1 (mod m), return i.

    ``zero_divisors`` is set when p^i + 1 and p^i - 1 are both zero
    divisors in Z/m, the only way p^i = -1 can fail for even order.
    """
    if gcd(p, m) != 1:
        raise NotCoprime(f"gcd({p}, {m}) != 1")
    order = multiplicative_order(p, m)
    if order % 2:
        return OrderExponent(order, None, False)
    i = order // 2
    r = pow(p, i, m)
    if r == m - 1:
        return OrderExponent(order, i, False)
    both = gcd(r + 1, m) > 1 and gcd(r - 1, m) > 1
    return OrderExponent(order, None, both)
