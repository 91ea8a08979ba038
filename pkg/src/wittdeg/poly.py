"""Sparse multivariate polynomials over an exact field.

A polynomial is a map from exponent tuples to nonzero scalars; the ring
records the variable names and the field.  All values are immutable after
construction and all operations are pure.

The text grammar (whitespace-insensitive)::

    expr   := ["-"] term (("+"|"-") term)*
    term   := coeff ("*" factor)* | factor ("*" factor)*
    factor := var ("^" nat)?
    coeff  := int ("/" posint)?

Unary minus is allowed on the leading term only.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import (
    InternalError,
    NotSquareSystem,
    ParseError,
    RingMismatch,
    UnknownVariable,
)
from .fields import FieldSpec
from .orders import GREVLEX, MonomialOrder


class Ring:
    """A polynomial ring: ordered variable names over a FieldSpec."""

    __slots__ = ("variables", "field", "_index")

    def __init__(self, variables: Sequence[str], field: FieldSpec):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise RingMismatch("duplicate variable names")
        self.field = field
        self._index = {v: i for i, v in enumerate(self.variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(self.field.one)

    def constant(self, c) -> "Poly":
        c = self.field.canon(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, i: int) -> "Poly":
        exps = [0] * self.nvars
        exps[i] = 1
        return Poly(self, {tuple(exps): self.field.one})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], c=1) -> "Poly":
        c = self.field.canon(c)
        return Poly(self, {tuple(exps): c} if c else {})

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.variables == other.variables
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"Ring({', '.join(self.variables)}; {self.field})"


class Poly:
    """Immutable sparse polynomial; equality is term-map equality."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention."""
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self, order: MonomialOrder = GREVLEX):
        """(exponents, coefficient) of the largest term; errors on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring} != {self.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = field.add(terms.get(e, field.zero), c)
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        field = self.ring.field
        return Poly(self.ring, {e: field.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = field.add(terms.get(e, field.zero), field.mul(c1, c2))
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c):
        """Multiply by a scalar."""
        field = self.ring.field
        c = field.canon(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {e: field.mul(v, c) for e, v in self.terms.items()})

    def monic(self, order: MonomialOrder = GREVLEX):
        if self.is_zero:
            return self
        _, lc = self.leading(order)
        return self.scale(self.ring.field.inv(lc))

    # -- calculus / composition ----------------------------------------------

    def deriv(self, i: int) -> "Poly":
        """Partial derivative with respect to variable i."""
        field = self.ring.field
        terms: dict = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            coeff = field.mul(c, field.from_int(e[i]))
            if not coeff:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = coeff
        return Poly(self.ring, terms)

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Exact composition: replace variable i by images[i].

        The images fix the target ring (they must share one); their number
        must equal this polynomial's variable count.
        """
        if len(images) != self.ring.nvars:
            raise RingMismatch(
                f"expected {self.ring.nvars} images, got {len(images)}"
            )
        target = images[0].ring
        for q in images:
            if q.ring != target:
                raise RingMismatch("images live in different rings")
        powers: list[list[Poly]] = [[target.one(), q] for q in images]

        def power(i: int, k: int) -> Poly:
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1] * cache[1])
            return cache[k]

        result = target.zero()
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def exact_div(self, divisor: "Poly", order: MonomialOrder = GREVLEX) -> "Poly":
        """Quotient self/divisor when the division is exact in the ring."""
        if divisor.ring != self.ring:
            raise RingMismatch("division across rings")
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.ring.field
        de, dc = divisor.leading(order)
        quot = self.ring.zero()
        rem = self
        while not rem.is_zero:
            re_, rc = rem.leading(order)
            qe = tuple(a - b for a, b in zip(re_, de))
            if any(x < 0 for x in qe):
                raise InternalError("inexact polynomial division")
            q = self.ring.monomial(qe, field.div(rc, dc))
            quot = quot + q
            rem = rem - q * divisor
        return quot

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)})"


# -- parsing -------------------------------------------------------------

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([+\-*/^])|(\S)")


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        pos = m.start()
        if m.group(1):
            tokens.append(("int", m.group(1), pos))
        elif m.group(2):
            tokens.append(("ident", m.group(2), pos))
        elif m.group(3):
            tokens.append(("op", m.group(3), pos))
        else:
            raise ParseError(f"unexpected character {m.group(4)!r}", pos)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Poly:
        negate = False
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.advance()
            negate = True
        p = self.term()
        if negate:
            p = -p
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                t = self.term()
                p = p + t if val == "+" else p - t
            elif kind == "end":
                return p
            else:
                raise ParseError(f"expected '+' or '-', got {val!r}", pos)

    def term(self) -> Poly:
        kind, val, pos = self.peek()
        if kind == "int":
            p = self.ring.constant(self.coeff())
        elif kind == "ident":
            p = self.factor()
        else:
            raise ParseError(f"expected coefficient or variable, got {val!r}", pos)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                p = p * self.factor()
            else:
                return p

    def coeff(self):
        kind, val, pos = self.advance()
        num = int(val)
        kind, val, _ = self.peek()
        if kind == "op" and val == "/":
            self.advance()
            kind, val, pos2 = self.advance()
            if kind != "int":
                raise ParseError(f"expected denominator, got {val!r}", pos2)
            den = int(val)
            if den == 0:
                raise ParseError("zero denominator", pos2)
            return self.ring.field.canon(Fraction(num, den))
        return self.ring.field.from_int(num)

    def factor(self) -> Poly:
        kind, val, pos = self.advance()
        if kind != "ident":
            raise ParseError(f"expected variable, got {val!r}", pos)
        idx = self.ring._index.get(val)
        if idx is None:
            raise UnknownVariable(val, pos)
        exp = 1
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, pos2 = self.advance()
            if kind != "int":
                raise ParseError(f"expected exponent, got {val!r}", pos2)
            exp = int(val)
        exps = [0] * self.ring.nvars
        exps[idx] = exp
        return self.ring.monomial(exps)


def parse_poly(text: str, ring: Ring) -> Poly:
    """Parse the grammar above; raises ParseError/UnknownVariable."""
    return _Parser(text, ring).expr()


def format_monomial(ring: Ring, exps) -> str:
    parts = [
        v if e == 1 else f"{v}^{e}"
        for v, e in zip(ring.variables, exps)
        if e
    ]
    return "*".join(parts) if parts else "1"


def format_poly(p: Poly) -> str:
    """Canonical text form; round-trips through parse_poly."""
    if p.is_zero:
        return "0"
    field = p.ring.field
    items = sorted(p.terms.items(), key=lambda kv: GREVLEX.key(kv[0]), reverse=True)
    pieces = []
    for e, c in items:
        mono = format_monomial(p.ring, e)
        if field.is_rationals:
            negative = c < 0
            mag = -c if negative else c
            if mono == "1":
                body = field.format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{field.format_scalar(mag)}*{mono}"
        else:
            negative = False
            body = (
                field.format_scalar(c)
                if mono == "1"
                else (mono if c == 1 else f"{field.format_scalar(c)}*{mono}")
            )
        pieces.append(("-" if negative else "+", body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- matrices and determinants ---------------------------------------------


def _check_square(matrix) -> int:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise NotSquareSystem("matrix is not square")
    return n


def det(matrix: Sequence[Sequence[Poly]], order: MonomialOrder = GREVLEX) -> Poly:
    """Exact determinant over the polynomial ring.

    Cofactor expansion for n <= 4, fraction-free Bareiss elimination above
    (divisions are exact over an integral domain, so no rational-function
    intermediates appear).
    """
    n = _check_square(matrix)
    if n == 0:
        raise NotSquareSystem("empty matrix has no ring to live in")
    ring = matrix[0][0].ring
    for row in matrix:
        for x in row:
            if x.ring != ring:
                raise RingMismatch("matrix entries in different rings")
    if n <= 4:
        return _det_cofactor(matrix, ring)
    return _det_bareiss([list(row) for row in matrix], ring, order)


def _det_cofactor(m, ring: Ring) -> Poly:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = ring.zero()
    for j in range(n):
        if m[0][j].is_zero:
            continue
        minor = [[m[r][c] for c in range(n) if c != j] for r in range(1, n)]
        sub = _det_cofactor(minor, ring)
        term = m[0][j] * sub
        total = total + (term if j % 2 == 0 else -term)
    return total


def _det_bareiss(m, ring: Ring, order: MonomialOrder) -> Poly:
    n = len(m)
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if m[k][k].is_zero:
            for r in range(k + 1, n):
                if not m[r][k].is_zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev, order)
            m[i][k] = ring.zero()
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def substitute(p: Poly, images: Sequence[Poly]) -> Poly:
    """Module-level alias for Poly.substitute."""
    return p.substitute(images)


def jacobian_matrix(images: Sequence[Poly]) -> list[list[Poly]]:
    n = len(images)
    ring = images[0].ring
    if ring.nvars != n:
        raise NotSquareSystem(f"{n} polynomials in {ring.nvars} variables")
    return [[images[i].deriv(j) for j in range(n)] for i in range(n)]


def jacobian_det(images: Sequence[Poly]) -> Poly:
    """Determinant of the matrix of partial derivatives."""
    return det(jacobian_matrix(images))
