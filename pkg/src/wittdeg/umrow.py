"""Unimodular rows over finitely presented algebras.

A row is unimodular when its entries generate the unit ideal modulo the
presentation relations; certificates (cofactors summing to 1) are produced
by Groebner cofactor tracking and re-verified by exact reduction.

The obstruction report ties a validated endomorphism to the completability
of the induced row over S_n = k[x_1..x_n, y_1..y_n]/(sum x_i y_i - 1): a
nonzero degree class means the row (f_1,...,f_n) is not completable there.
Vanishing of the class decides nothing (the obstruction is not known to be
injective), and the verdict strings keep that asymmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .degree import DegreeReport, Endo, degree_of
from .errors import ArityMismatch, EvenN, RingMismatch
from .fields import FieldSpec
from .groebner import buchberger, contains_one_with_certificate, normal_form
from .orders import GREVLEX, MonomialOrder
from .poly import Poly, Ring
from .witt import witt_class_display


@dataclass(frozen=True)
class AlgebraPresentation:
    """k[variables] / (relations); relations may be empty."""

    ring: Ring
    relations: tuple[Poly, ...] = ()

    def __post_init__(self):
        for r in self.relations:
            if r.ring != self.ring:
                raise RingMismatch("relation outside the declared ring")


@dataclass(frozen=True)
class UnimodularRow:
    """A row of polynomial lifts over a presented algebra."""

    algebra: AlgebraPresentation
    entries: tuple[Poly, ...]

    def __post_init__(self):
        for e in self.entries:
            if e.ring != self.algebra.ring:
                raise RingMismatch("row entry outside the algebra's ring")

    @property
    def n(self) -> int:
        return len(self.entries)


_certificate_cache: dict = {}


def is_unimodular(
    row: UnimodularRow, order: MonomialOrder = GREVLEX
) -> Optional[tuple[Poly, ...]]:
    """Certificate (b_1,...,b_n) with sum(b_i * a_i) == 1 mod relations.

    Returns None when 1 is not in the ideal.  Certificates are reduced
    modulo the relation ideal, re-verified by exact reduction, and cached
    per row value.
    """
    key = (row, order)
    if key in _certificate_cache:
        return _certificate_cache[key]
    gens = list(row.entries) + list(row.algebra.relations)
    cert = contains_one_with_certificate(gens, order)
    result = None
    if cert is not None:
        entry_cofs = list(cert[: row.n])
        if row.algebra.relations:
            relgb = buchberger(list(row.algebra.relations), order)
            entry_cofs = [normal_form(c, relgb) for c in entry_cofs]
            total = row.algebra.ring.zero()
            for b, a in zip(entry_cofs, row.entries):
                total = total + b * a
            check = normal_form(total - row.algebra.ring.one(), relgb)
        else:
            total = row.algebra.ring.zero()
            for b, a in zip(entry_cofs, row.entries):
                total = total + b * a
            check = total - row.algebra.ring.one()
        if not check.is_zero:
            raise AssertionError("certificate failed re-verification")
        result = tuple(entry_cofs)
    _certificate_cache[key] = result
    return result


def apply_elementary(
    row: UnimodularRow, i: int, j: int, lam: Poly
) -> UnimodularRow:
    """Add lam times entry i to entry j (an elementary column operation)."""
    if i == j:
        raise IndexError("elementary operation needs distinct indices")
    if not (0 <= i < row.n and 0 <= j < row.n):
        raise IndexError("row index out of range")
    entries = list(row.entries)
    entries[j] = entries[j] + lam * entries[i]
    return UnimodularRow(algebra=row.algebra, entries=tuple(entries))


def compose_with_endo(row: UnimodularRow, endo: Endo) -> UnimodularRow:
    """Entry j of the result is endo.images[j] evaluated on the row."""
    if endo.n != row.n:
        raise ArityMismatch(
            f"endomorphism arity {endo.n} != row length {row.n}"
        )
    entries = tuple(img.substitute(list(row.entries)) for img in endo.images)
    return UnimodularRow(algebra=row.algebra, entries=entries)


def build_section(entries: Sequence[Poly]) -> tuple[Poly, ...]:
    """The alternating section: pairs (a_{2k-1}, a_{2k}) -> (-a_{2k},
    a_{2k-1}), trailing 0 when the length is odd.  Dotted with the row it
    gives 0 as an exact identity."""
    n = len(entries)
    if n < 2:
        raise ArityMismatch("section needs a row of length at least 2")
    ring = entries[0].ring
    out: list[Poly] = []
    for k in range(n // 2):
        out.append(-entries[2 * k + 1])
        out.append(entries[2 * k])
    if n % 2:
        out.append(ring.zero())
    return tuple(out)


def universal_row(field: FieldSpec, n: int) -> UnimodularRow:
    """The tautological row (x_1,...,x_n) over
    k[x_1..x_n, y_1..y_n]/(sum x_i y_i - 1), through which every unimodular
    row of length n factors."""
    names = tuple(f"x{i + 1}" for i in range(n)) + tuple(
        f"y{i + 1}" for i in range(n)
    )
    ring = Ring(names, field)
    gens = ring.gens()
    xs, ys = gens[:n], gens[n:]
    rel = ring.zero()
    for x, y in zip(xs, ys):
        rel = rel + x * y
    rel = rel - ring.one()
    alg = AlgebraPresentation(ring=ring, relations=(rel,))
    return UnimodularRow(algebra=alg, entries=tuple(xs))


def obstruction_report(
    endo: Endo, order: MonomialOrder = GREVLEX
) -> tuple[DegreeReport, str]:
    """Degree report plus a completability verdict for the induced row.

    Only defined for odd arity (the row-level symbol does not factor
    through SL_n for even n).  The non-completability claim covers the row
    (f_1,...,f_n) over S_n; nothing is claimed when the class vanishes, and
    for n = 1 the class is reported without a row-level claim.
    """
    n = endo.n
    if n % 2 == 0:
        raise EvenN("the row-level obstruction needs odd arity")
    report = degree_of(endo, order)
    cls = witt_class_display(report.diag)
    row_str = ", ".join(str(p) for p in endo.images)
    field = report.field
    if n == 1:
        verdict = (
            f"degree class {cls} in W({field}); no row-level claim for n = 1"
        )
    elif not report.is_zero:
        verdict = (
            f"obstruction {cls} != 0 in W({field}): "
            f"row ({row_str}) over S_{n} is not completable"
        )
    else:
        verdict = (
            f"obstruction vanishes in W({field}): completability of "
            f"row ({row_str}) over S_{n} is not decided by this invariant"
        )
    return report, verdict
