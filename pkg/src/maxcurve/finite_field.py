"""Arithmetic in F_{q^2} = F_p[t]/(f), with f of degree 2k.

Elements are fixed-length tuples of residues mod p, lowest degree first, so
two elements are equal exactly when their coefficient tuples are equal.  The
modulus f is the lexicographically smallest monic irreducible polynomial of
degree 2k, where polynomials are compared by their coefficient sequence read
from the constant term up.  This makes the representation reproducible.

Every element also has an integer index ``sum(c_i * p**i)``; enumeration runs
through the indices in increasing order.  The index is what the vectorized
tables in :class:`FieldTables` work with.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from ._intmath import factorize, is_prime
from .errors import BudgetExceeded, DivisionByZero, MixedFields, NotPrime

__all__ = [
    "DEFAULT_MAX_ORDER",
    "FieldDescriptor",
    "FieldElement",
    "FieldTables",
    "field_create",
    "is_irreducible",
]

DEFAULT_MAX_ORDER = 2**20


# -- polynomials over F_p as lists, lowest degree first ---------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m over F_p."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i in range(dm):
            a[shift + i] = (a[shift + i] - c * m[i]) % p
        a.pop()
        _trim(a)
    return a


def _monic_polys(degree, p):
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(coeffs, p):
    """Trial-division irreducibility test for a monic polynomial over F_p.

    ``coeffs`` lists coefficients from the constant term up.  Adequate for the
    small degrees used here; every monic divisor of degree <= deg/2 is tried.
    """
    coeffs = list(coeffs)
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[-1] % p != 1:
        raise ValueError("expected a monic polynomial of positive degree")
    if deg == 1:
        return True
    if coeffs[0] % p == 0:
        return False
    # cheap root test before the general search
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(coeffs)) % p == 0:
            return False
    for d in range(2, deg // 2 + 1):
        for g in _monic_polys(d, p):
            if not _poly_mod(coeffs, g, p):
                return False
    return True


def _smallest_irreducible(degree, p):
    for low in itertools.product(range(p), repeat=degree):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


@lru_cache(maxsize=None)
def field_create(p, k=1, max_order=DEFAULT_MAX_ORDER):
    """Build the descriptor of F_{q^2} with q = p**k.

    >>> field_create(3, 1).modulus
    (1, 0, 1)
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"exponent k must be >= 1, got {k}")
    order = p ** (2 * k)
    if order > max_order:
        raise BudgetExceeded(f"q^2 = {order} exceeds the field size budget {max_order}")
    return FieldDescriptor(p, k, _smallest_irreducible(2 * k, p))


@dataclass(frozen=True)
class FieldDescriptor:
    """F_{p^{2k}} as F_p[t]/(modulus); the curve field F_{q^2}."""

    p: int
    k: int
    modulus: tuple

    @property
    def q(self):
        return self.p**self.k

    @property
    def ext_degree(self):
        return 2 * self.k

    @property
    def order(self):
        return self.p ** self.ext_degree

    def __str__(self):
        return f"F_{self.order} (p={self.p}, k={self.k})"

    def __call__(self, value):
        """Coerce an int (prime-field residue), coefficient sequence, or element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.ext_degree - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.ext_degree:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs += [0] * (self.ext_degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_index(self, index):
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} out of range for {self}")
        coeffs = []
        for _ in range(self.ext_degree):
            index, r = divmod(index, self.p)
            coeffs.append(r)
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def gen(self):
        """The class of t."""
        return self([0, 1])

    def elements(self):
        """Yield all q^2 elements once each, in increasing index order."""
        for coeffs in itertools.product(range(self.p), repeat=self.ext_degree):
            yield FieldElement(self, coeffs[::-1])

    @cached_property
    def tables(self):
        return FieldTables.build(self)


class FieldElement:
    """An element of F_{q^2}; immutable, hashable, compared structurally."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- structure ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    @property
    def index(self):
        p = self.field.p
        out = 0
        for c in reversed(self.coeffs):
            out = out * p + c
        return out

    def __repr__(self):
        return f"FieldElement({self}, p={self.field.p}, k={self.field.k})"

    def __str__(self):
        parts = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts) or "0"

    # -- arithmetic --------------------------------------------------------

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, ((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, ((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, ((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        F = self.field
        p, d = F.p, F.ext_degree
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        prod = [c % p for c in prod]
        red = _poly_mod(prod, F.modulus, p)
        return FieldElement(F, tuple(red) + (0,) * (d - len(red)))

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise DivisionByZero("0 has no inverse")
        F = self.field
        p = F.p
        r0, r1 = list(F.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while len(r1) > 1:
            # one long-division step: r0 = quot * r1 + rem
            quot = [0] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            lead_inv = pow(r1[-1], p - 2, p)
            while len(rem) >= len(r1):
                c = rem[-1] * lead_inv % p
                shift = len(rem) - len(r1)
                quot[shift] = c
                for i, b in enumerate(r1):
                    rem[shift + i] = (rem[shift + i] - c * b) % p
                rem.pop()
                _trim(rem)
            # s_next = s0 - quot * s1
            prod = [0] * (len(quot) + len(s1))
            for i, a in enumerate(quot):
                for j, b in enumerate(s1):
                    prod[i + j] += a * b
            width = max(len(s0), len(prod))
            s_next = _trim([((s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)) % p
                            for i in range(width)])
            r0, r1 = r1, rem
            s0, s1 = s1, s_next
        c = pow(r1[0], p - 2, p)
        return F([a * c for a in s1])

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, e):
        if not isinstance(e, (int, np.integer)):
            return NotImplemented
        e = int(e)
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self):
        return self ** self.field.p


@dataclass(frozen=True, eq=False)
class FieldTables:
    """Index-level lookup tables for vectorized evaluation.

    ``log[i]`` is the discrete log of element ``i`` to a fixed primitive
    element (``-1`` for zero); ``exp`` inverts it on ``[0, q^2 - 1)``.
    Addition works digit-wise on the base-p expansion of indices.
    """

    field: FieldDescriptor
    primitive: int
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    @classmethod
    def build(cls, F):
        n = F.order
        group = n - 1
        primes = list(factorize(group)) if group > 1 else []
        for idx in range(1, n):
            g = F.from_index(idx)
            if all(g ** (group // r) != F.one for r in primes):
                break
        exp = np.empty(max(group, 1), dtype=np.int64)
        log = np.full(n, -1, dtype=np.int64)
        x = F.one
        for e in range(group):
            i = x.index
            exp[e] = i
            log[i] = e
            x = x * g
        return cls(F, g.index, exp, log)

    def add(self, *arrays):
        """Index of the sum of the elements with the given (broadcast) indices."""
        p = self.field.p
        if p == 2:
            out = arrays[0]
            for a in arrays[1:]:
                out = np.bitwise_xor(out, a)
            return out
        out = 0
        place = 1
        for _ in range(self.field.ext_degree):
            digit = sum((a // place) % p for a in arrays) % p
            out = out + digit * place
            place *= p
        return out

    def is_zero_sum(self, arrays):
        """Boolean mask: do the elements in ``arrays`` sum to zero?"""
        p = self.field.p
        if p == 2:
            return self.add(*arrays) == 0
        mask = None
        place = 1
        for _ in range(self.field.ext_degree):
            ok = sum((a // place) % p for a in arrays) % p == 0
            mask = ok if mask is None else mask & ok
            place *= p
        return mask
