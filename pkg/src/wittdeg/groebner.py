"""Buchberger's algorithm with reduced bases and optional cofactor tracking.

Cofactors express every basis element exactly as a combination of the input
generators; they are what certificate extraction (1 = sum c_i * g_i) needs.
Everything is deterministic: normal selection strategy (smallest lcm first,
ties by input index), basis sorted by leading monomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NotFiniteLength, RingMismatch
from .orders import GREVLEX, MonomialOrder
from .poly import Poly, Ring


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _common_ring(polys: Sequence[Poly]) -> Ring:
    ring = polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise RingMismatch("generators live in different rings")
    return ring


def divide(p: Poly, divisors: Sequence[Poly], order: MonomialOrder = GREVLEX):
    """Multivariate division: (quotients, remainder).

    p == sum(q_i * divisors_i) + remainder, and no remainder term is
    divisible by any divisor's leading monomial.  Deterministic: the first
    applicable divisor (list order) reduces the current leading term.
    """
    ring = p.ring
    field = ring.field
    leads = [d.leading(order) for d in divisors]
    quots = [ring.zero() for _ in divisors]
    rem = ring.zero()
    cur = p
    while not cur.is_zero:
        ce, cc = cur.leading(order)
        for k, (de, dc) in enumerate(leads):
            if _divides(de, ce):
                mono = ring.monomial(
                    tuple(a - b for a, b in zip(ce, de)), field.div(cc, dc)
                )
                quots[k] = quots[k] + mono
                cur = cur - mono * divisors[k]
                break
        else:
            t = ring.monomial(ce, cc)
            rem = rem + t
            cur = cur - t
    return quots, rem


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis, optionally with generator cofactors.

    When cofactors are present, basis[k] == sum(cofactors[k][m] *
    generators[m]) holds exactly.
    """

    generators: tuple[Poly, ...]
    basis: tuple[Poly, ...]
    order: MonomialOrder
    cofactors: Optional[tuple[tuple[Poly, ...], ...]] = None

    @property
    def ring(self) -> Ring:
        return self.generators[0].ring

    def normal_form(self, p: Poly) -> Poly:
        return normal_form(p, self)


class _Tracked:
    """A working basis element with its generator combination."""

    __slots__ = ("poly", "cof")

    def __init__(self, poly, cof):
        self.poly = poly
        self.cof = cof


def _vec_sub_scaled(cof, other, mono: Poly):
    return [a - mono * b for a, b in zip(cof, other)]


def _reduce_tracked(p: Poly, cof, work, order, track):
    """Full normal form against the working basis, carrying the cofactor."""
    ring = p.ring
    rem = ring.zero()
    cur = p
    while not cur.is_zero:
        ce, cc = cur.leading(order)
        for elt in work:
            de, dc = elt.poly.leading(order)
            if _divides(de, ce):
                mono = ring.monomial(
                    tuple(a - b for a, b in zip(ce, de)),
                    ring.field.div(cc, dc),
                )
                cur = cur - mono * elt.poly
                if track:
                    cof = _vec_sub_scaled(cof, elt.cof, mono)
                break
        else:
            t = ring.monomial(ce, cc)
            rem = rem + t
            cur = cur - t
    return rem, cof


def buchberger(
    gens: Sequence[Poly],
    order: MonomialOrder = GREVLEX,
    track_cofactors: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Output is independent of generator order and duplication (uniqueness of
    the reduced basis); cofactors are relative to the given generator list.
    """
    if not gens:
        raise RingMismatch("need at least one generator")
    ring = _common_ring(gens)
    field = ring.field
    m = len(gens)

    def unit(k):
        return [ring.one() if i == k else ring.zero() for i in range(m)]

    work: list[_Tracked] = []
    pairs: list[tuple[int, int]] = []

    def append(poly: Poly, cof) -> None:
        _, lc = poly.leading(order)
        inv = field.inv(lc)
        poly = poly.scale(inv)
        if track_cofactors:
            cof = [c.scale(inv) for c in cof]
        idx = len(work)
        work.append(_Tracked(poly, cof))
        pairs.extend((s, idx) for s in range(idx))

    for k, g in enumerate(gens):
        if g.is_zero:
            continue
        r, cof = _reduce_tracked(g, unit(k), work, order, track_cofactors)
        if not r.is_zero:
            append(r, cof)

    def pair_key(ij):
        i, j = ij
        li, _ = work[i].poly.leading(order)
        lj, _ = work[j].poly.leading(order)
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        return (order.key(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.remove((i, j))
        li, _ = work[i].poly.leading(order)
        lj, _ = work[j].poly.leading(order)
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        if lcm == tuple(a + b for a, b in zip(li, lj)):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        mi = ring.monomial(tuple(a - b for a, b in zip(lcm, li)))
        mj = ring.monomial(tuple(a - b for a, b in zip(lcm, lj)))
        s = mi * work[i].poly - mj * work[j].poly
        cof = None
        if track_cofactors:
            cof = [mi * a - mj * b for a, b in zip(work[i].cof, work[j].cof)]
        r, cof = _reduce_tracked(s, cof, work, order, track_cofactors)
        if not r.is_zero:
            append(r, cof)

    return _reduce_basis(tuple(gens), work, order, track_cofactors)


def _reduce_basis(gens, work, order, track) -> GroebnerBasis:
    # minimal basis: drop elements whose leading monomial another divides
    work = sorted(work, key=lambda e: order.key(e.poly.leading(order)[0]))
    kept: list[_Tracked] = []
    for elt in work:
        le = elt.poly.leading(order)[0]
        if not any(_divides(k.poly.leading(order)[0], le) for k in kept):
            kept.append(elt)
    # autoreduce tails until stable
    changed = True
    while changed:
        changed = False
        for idx, elt in enumerate(kept):
            others = kept[:idx] + kept[idx + 1 :]
            r, cof = _reduce_tracked(
                elt.poly, list(elt.cof) if track else None, others, order, track
            )
            if r != elt.poly:
                kept[idx] = _Tracked(r, cof)
                changed = True
    kept.sort(key=lambda e: order.key(e.poly.leading(order)[0]))
    return GroebnerBasis(
        generators=gens,
        basis=tuple(e.poly for e in kept),
        order=order,
        cofactors=tuple(tuple(e.cof) for e in kept) if track else None,
    )


def normal_form(p: Poly, gb: GroebnerBasis) -> Poly:
    """Remainder of p modulo the basis; supported on standard monomials."""
    if p.ring != gb.ring:
        raise RingMismatch("polynomial not in the basis ring")
    _, rem = divide(p, gb.basis, gb.order)
    return rem


@dataclass(frozen=True)
class QuotientAlgebra:
    """k[x]/I with a finite standard-monomial basis.

    monomials are the exponent tuples outside the leading-term ideal,
    sorted ascending in the basis order; dimension is their count (the
    length of the quotient).
    """

    gb: GroebnerBasis
    monomials: tuple[tuple[int, ...], ...]
    dimension: int

    @property
    def ring(self) -> Ring:
        return self.gb.ring

    def normal_form(self, p: Poly) -> Poly:
        return normal_form(p, self.gb)


def standard_monomials(gb: GroebnerBasis) -> QuotientAlgebra:
    """Monomial basis of the quotient; errors if it is infinite.

    Finiteness test: every variable must have a pure power among the leading
    monomials.  Standard monomials then live in the box bounded by those
    pure powers.
    """
    ring = gb.ring
    n = ring.nvars
    leads = [g.leading(gb.order)[0] for g in gb.basis]
    if any(sum(e) == 0 for e in leads):
        # the ideal is the whole ring; the quotient is the zero ring
        return QuotientAlgebra(gb=gb, monomials=(), dimension=0)
    box = [None] * n
    for e in leads:
        nz = [i for i, x in enumerate(e) if x]
        if len(nz) == 1:
            i = nz[0]
            if box[i] is None or e[i] < box[i]:
                box[i] = e[i]
    missing = [ring.variables[i] for i in range(n) if box[i] is None]
    if missing:
        raise NotFiniteLength(
            "no pure power of "
            + ", ".join(missing)
            + " among the leading monomials"
        )
    std = [
        exps
        for exps in itertools.product(*(range(b) for b in box))
        if not any(_divides(le, exps) for le in leads)
    ]
    std.sort(key=gb.order.key)
    return QuotientAlgebra(gb=gb, monomials=tuple(std), dimension=len(std))


def supported_only_at_origin(qa: QuotientAlgebra) -> bool:
    """True iff every variable is nilpotent in the quotient.

    x_i^D lies in the ideal iff the multiplication operator by x_i is
    nilpotent (its minimal polynomial has degree at most D), so testing the
    D-th powers is exact.
    """
    ring = qa.ring
    d = qa.dimension
    for i in range(ring.nvars):
        exps = [0] * ring.nvars
        exps[i] = d
        if not qa.normal_form(ring.monomial(exps)).is_zero:
            return False
    return True


def contains_one_with_certificate(
    gens: Sequence[Poly], order: MonomialOrder = GREVLEX
):
    """Cofactors (c_1, ..., c_m) with sum(c_i * gens_i) == 1, or None.

    The identity is re-verified by exact expansion before returning.
    """
    gb = buchberger(gens, order, track_cofactors=True)
    if len(gb.basis) != 1 or gb.basis[0] != gens[0].ring.one():
        return None
    cert = gb.cofactors[0]
    total = gens[0].ring.zero()
    for c, g in zip(cert, gens):
        total = total + c * g
    if total != gens[0].ring.one():
        raise AssertionError("cofactor identity failed to expand to 1")
    return cert
