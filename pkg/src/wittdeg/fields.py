"""Exact scalar arithmetic over Q and over odd prime fields F_p.

Scalars are plain Python values: ``fractions.Fraction`` over Q, ints reduced
to ``[0, p)`` over F_p.  A :class:`FieldSpec` carries the arithmetic so that
polynomials and matrices stay agnostic of the coefficient representation.

Square classes are canonicalized as follows: over Q the representative is a
signed squarefree integer (as an integer-valued Fraction); over F_p it is 1
for squares and the smallest positive non-residue otherwise.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import (
    AlgebraError,
    EvenModulus,
    FactorBoundExceeded,
    ParseError,
    ZeroScalar,
)

#: Largest integer that square-class computations will factor by trial division.
FACTOR_BOUND = 10**9

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the factor bound."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class FieldSpec:
    """The coefficient field: the rationals or F_p with p an odd prime."""

    __slots__ = ("kind", "modulus", "_nonresidue")

    def __init__(self, kind: str, modulus: int | None = None):
        if kind == "Q":
            if modulus is not None:
                raise AlgebraError("rationals take no modulus")
        elif kind == "Fp":
            if modulus == 2:
                raise EvenModulus("characteristic 2 is not supported")
            if modulus is None or not is_prime(modulus):
                raise AlgebraError(f"modulus {modulus!r} is not prime")
        else:
            raise AlgebraError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.modulus = modulus
        self._nonresidue = None

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Q")

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls("Fp", p)

    @property
    def is_rationals(self) -> bool:
        return self.kind == "Q"

    # -- canonical values ------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.is_rationals else 0

    @property
    def one(self):
        return Fraction(1) if self.is_rationals else 1

    def from_int(self, n: int):
        return Fraction(n) if self.is_rationals else n % self.modulus

    def canon(self, x):
        """Coerce ints/Fractions into the canonical scalar representation."""
        if self.is_rationals:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.modulus == 0:
                raise ZeroScalar(f"denominator divisible by {self.modulus}")
            return x.numerator * pow(x.denominator, -1, self.modulus) % self.modulus
        return x % self.modulus

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        return a + b if self.is_rationals else (a + b) % self.modulus

    def sub(self, a, b):
        return a - b if self.is_rationals else (a - b) % self.modulus

    def mul(self, a, b):
        return a * b if self.is_rationals else (a * b) % self.modulus

    def neg(self, a):
        return -a if self.is_rationals else (-a) % self.modulus

    def inv(self, a):
        if not a:
            raise ZeroScalar("inverse of zero")
        return 1 / a if self.is_rationals else pow(a, -1, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- text ------------------------------------------------------------

    def parse_scalar(self, text: str):
        m = _SCALAR_RE.match(text)
        if not m:
            raise ParseError(f"bad scalar {text!r}", 0)
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ParseError("zero denominator", 0)
        return self.canon(Fraction(num, den))

    def format_scalar(self, x) -> str:
        return str(x)

    def least_nonresidue(self) -> int:
        """Smallest positive quadratic non-residue mod p (cached)."""
        if self._nonresidue is None:
            p = self.modulus
            a = 2
            while pow(a, (p - 1) // 2, p) == 1:
                a += 1
            self._nonresidue = a
        return self._nonresidue

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __str__(self):
        return "Q" if self.is_rationals else f"F{self.modulus}"

    def __repr__(self):
        return f"FieldSpec({self})"


def _squarefree_part(n: int) -> int:
    """Product of the primes dividing n an odd number of times (n >= 1)."""
    if n > FACTOR_BOUND:
        raise FactorBoundExceeded(
            f"{n} exceeds the trial-division bound {FACTOR_BOUND}"
        )
    res = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                res *= d
        d += 1 if d == 2 else 2
    return res * n


def square_class(field: FieldSpec, a):
    """Canonical representative of a modulo nonzero squares.

    Q: signed squarefree integer (returned as a Fraction).  F_p: 1 or the
    smallest positive non-residue.  Idempotent on its own output.
    """
    a = field.canon(a)
    if not a:
        raise ZeroScalar("zero has no square class")
    if field.is_rationals:
        sign = -1 if a < 0 else 1
        sn = _squarefree_part(abs(a.numerator))
        sd = _squarefree_part(a.denominator)
        g = math.gcd(sn, sd)
        return Fraction(sign * (sn // g) * (sd // g))
    p = field.modulus
    return field.one if pow(a, (p - 1) // 2, p) == 1 else field.least_nonresidue()


def square_class_mul(field: FieldSpec, a, b):
    """Product of two canonical square-class representatives, canonicalized.

    Avoids factoring the product: for squarefree integers a, b the squarefree
    part of ab is (a/g)(b/g) with g = gcd(|a|, |b|).
    """
    if field.is_rationals:
        sign = -1 if (a < 0) != (b < 0) else 1
        aa, bb = abs(a.numerator), abs(b.numerator)
        g = math.gcd(aa, bb)
        return Fraction(sign * (aa // g) * (bb // g))
    return square_class(field, field.mul(a, b))


def factor_squarefree(n: int) -> list[int]:
    """Prime factors of a squarefree integer |n| (trial division)."""
    n = abs(n)
    if n > FACTOR_BOUND:
        raise FactorBoundExceeded(
            f"{n} exceeds the trial-division bound {FACTOR_BOUND}"
        )
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def legendre(a, p: int) -> int:
    """Legendre symbol (a|p) in {+1, -1, 0} for an odd prime p."""
    if p == 2:
        raise EvenModulus("Legendre symbol needs an odd prime")
    if not is_prime(p):
        raise AlgebraError(f"{p} is not prime")
    if isinstance(a, Fraction):
        if a.denominator % p == 0:
            raise ZeroScalar(f"denominator divisible by {p}")
        a = a.numerator * pow(a.denominator, -1, p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _valuation(n: int, p: int) -> tuple[int, int]:
    """(v, u) with n = p^v * u and p not dividing u."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_symbol(a, b, place) -> int:
    """Local Hilbert symbol (a, b) at a rational place.

    ``place`` is the string "inf" for the real place or a prime integer.
    Standard formulas: at infinity -1 iff both arguments are negative; at odd
    p via valuations and Legendre symbols; at 2 via the (u-1)/2 and
    (u^2-1)/8 exponents.
    """
    a, b = Fraction(a), Fraction(b)
    if not a or not b:
        raise ZeroScalar("Hilbert symbol of zero")
    A = a.numerator * a.denominator
    B = b.numerator * b.denominator
    if place == "inf":
        return -1 if (A < 0 and B < 0) else 1
    p = place
    if not isinstance(p, int) or not is_prime(p):
        raise AlgebraError(f"place must be a prime or 'inf', got {place!r}")
    va, u = _valuation(A, p)
    vb, v = _valuation(B, p)
    if p == 2:
        e = ((u - 1) // 2) * ((v - 1) // 2)
        e += va * ((v * v - 1) // 8) + vb * ((u * u - 1) // 8)
        return -1 if e % 2 else 1
    s = 1
    if (va * vb) % 2 and (p - 1) // 2 % 2:
        s = -s
    if vb % 2:
        s *= legendre(u, p)
    if va % 2:
        s *= legendre(v, p)
    return s


def relevant_places(values) -> list:
    """"inf", 2, and the odd primes with odd valuation in some value.

    Every Hilbert symbol formed from the given nonzero rationals is +1 away
    from the returned places (only valuation parities and unit residues
    enter the odd-place formula).
    """
    primes: set[int] = set()
    for x in values:
        x = Fraction(x)
        for n in (abs(x.numerator), x.denominator):
            primes.update(factor_squarefree(_squarefree_part(n)))
    odd = sorted(q for q in primes if q % 2)
    return ["inf", 2] + odd
