"""Symmetric bilinear forms over the base field and their Witt classes.

Conventions (fixed for reproducibility):
  - signed discriminant of <a_1,...,a_r> is the square class of
    (-1)^(r(r-1)/2) * prod(a_i);
  - Hasse symbol at a place v is prod_{i<j} (a_i, a_j)_v;
  - the rank-2m hyperbolic form has Hasse symbol (-1,-1)_v^(m(m-1)/2).

Over Q a form is hyperbolic iff rank is even, signature is zero, the signed
discriminant is trivial and the Hasse symbols match the hyperbolic reference
at every relevant place (complete by the classification of rational
quadratic forms).  Over F_p: rank even and trivial signed discriminant.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from .errors import DegenerateForm, RingMismatch
from .fields import (
    FieldSpec,
    hilbert_symbol,
    relevant_places,
    square_class,
    square_class_mul,
)


@dataclass(frozen=True)
class GramForm:
    """A symmetric matrix over the field, with labelled basis."""

    field: FieldSpec
    matrix: tuple[tuple[object, ...], ...]
    basis_labels: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.matrix)
        for row in self.matrix:
            if len(row) != n:
                raise DegenerateForm("Gram matrix is not square")
        for i in range(n):
            for j in range(i):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise DegenerateForm("Gram matrix is not symmetric")

    @property
    def rank_bound(self) -> int:
        return len(self.matrix)


def gram_form(field: FieldSpec, rows, basis_labels=()) -> GramForm:
    matrix = tuple(tuple(field.canon(x) for x in row) for row in rows)
    return GramForm(field=field, matrix=matrix, basis_labels=tuple(basis_labels))


@dataclass(frozen=True)
class DiagForm:
    """<a_1,...,a_r> with entries canonical square-class representatives."""

    field: FieldSpec
    entries: tuple[object, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __str__(self):
        return "<" + ",".join(self.field.format_scalar(e) for e in self.entries) + ">"


def diag_form(field: FieldSpec, entries) -> DiagForm:
    """Canonicalize the entries to square-class representatives."""
    return DiagForm(
        field=field, entries=tuple(square_class(field, e) for e in entries)
    )


def diagonalize_with_transform(g: GramForm):
    """(raw diagonal entries, P) with P^T * G * P diagonal.

    Symmetric Gaussian elimination; a zero diagonal pivot is repaired by a
    basis swap or, failing that, by adding another basis vector (2a != 0
    since the characteristic is not 2).  Raises DegenerateForm if the form
    is singular.
    """
    field = g.field
    n = len(g.matrix)
    m = [list(row) for row in g.matrix]
    p = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]

    def add_col(dst, src, c):
        # basis change e_dst += c * e_src, applied symmetrically
        for r in range(n):
            m[r][dst] = field.add(m[r][dst], field.mul(c, m[r][src]))
        for r in range(n):
            m[dst][r] = field.add(m[dst][r], field.mul(c, m[src][r]))
        for r in range(n):
            p[r][dst] = field.add(p[r][dst], field.mul(c, p[r][src]))

    def swap(i, j):
        for r in range(n):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        m[i], m[j] = m[j], m[i]
        for r in range(n):
            p[r][i], p[r][j] = p[r][j], p[r][i]

    for k in range(n):
        if not m[k][k]:
            for t in range(k + 1, n):
                if m[t][t]:
                    swap(k, t)
                    break
            else:
                for t in range(k + 1, n):
                    if m[k][t]:
                        add_col(k, t, field.one)
                        break
                else:
                    raise DegenerateForm(
                        "form is degenerate (zero block of positive size)"
                    )
        pivot = m[k][k]
        for r in range(k + 1, n):
            if m[r][k]:
                add_col(r, k, field.neg(field.div(m[r][k], pivot)))
    return [m[i][i] for i in range(n)], p


def diagonalize(g: GramForm) -> DiagForm:
    """Diagonal form congruent to g, entries canonicalized."""
    raw, _ = diagonalize_with_transform(g)
    return diag_form(g.field, raw)


@dataclass(frozen=True)
class WittInvariants:
    """Classification data deciding identity in the Witt group."""

    field: FieldSpec
    rank: int
    signature: Optional[int]
    signed_discriminant: object
    hasse: dict = dataclass_field(default_factory=dict)

    def equivalent(self, other: "WittInvariants") -> bool:
        """Equality with Hasse maps compared over the union of places."""
        if (
            self.field != other.field
            or self.rank != other.rank
            or self.signature != other.signature
            or self.signed_discriminant != other.signed_discriminant
        ):
            return False
        places = set(self.hasse) | set(other.hasse)
        return all(
            self.hasse.get(v, 1) == other.hasse.get(v, 1) for v in places
        )


def invariants(d: DiagForm) -> WittInvariants:
    field = d.field
    r = d.rank
    det_class = field.one
    for e in d.entries:
        det_class = square_class_mul(field, det_class, e)
    sign_factor = field.from_int(-1 if (r * (r - 1) // 2) % 2 else 1)
    signed_disc = square_class_mul(field, det_class, sign_factor)
    if not field.is_rationals:
        return WittInvariants(
            field=field,
            rank=r,
            signature=None,
            signed_discriminant=signed_disc,
            hasse={},
        )
    signature = sum(1 if e > 0 else -1 for e in d.entries)
    hasse = {}
    for v in relevant_places(d.entries):
        s = 1
        for i in range(r):
            for j in range(i + 1, r):
                s *= hilbert_symbol(d.entries[i], d.entries[j], v)
        hasse[str(v)] = s
    return WittInvariants(
        field=field,
        rank=r,
        signature=signature,
        signed_discriminant=signed_disc,
        hasse=hasse,
    )


def _strip_obvious_pairs(d: DiagForm) -> DiagForm:
    """Remove <a, b> pairs with a ~ -b; preserves the Witt class."""
    field = d.field
    minus_one = square_class(field, field.from_int(-1))
    entries = list(d.entries)
    changed = True
    while changed:
        changed = False
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                if square_class_mul(field, entries[i], entries[j]) == minus_one:
                    del entries[j], entries[i]
                    changed = True
                    break
            if changed:
                break
    return DiagForm(field=field, entries=tuple(entries))


def hyperbolic_reference_hasse(field: FieldSpec, rank: int, place) -> int:
    """Hasse symbol of the rank-2m hyperbolic form: (-1,-1)_v^(m(m-1)/2)."""
    m = rank // 2
    if (m * (m - 1) // 2) % 2 == 0:
        return 1
    return hilbert_symbol(-1, -1, place)


def is_witt_zero(d: DiagForm) -> bool:
    """True iff the form is hyperbolic (trivial in the Witt group)."""
    field = d.field
    d = _strip_obvious_pairs(d)
    if d.rank % 2:
        return False
    inv = invariants(d)
    if inv.signed_discriminant != field.one:
        return False
    if not field.is_rationals:
        return True
    if inv.signature != 0:
        return False
    for v_str, s in inv.hasse.items():
        v = "inf" if v_str == "inf" else int(v_str)
        if s != hyperbolic_reference_hasse(field, d.rank, v):
            return False
    return True


def negate(d: DiagForm) -> DiagForm:
    return diag_form(d.field, tuple(d.field.neg(e) for e in d.entries))


def orthogonal_sum(d1: DiagForm, d2: DiagForm) -> DiagForm:
    if d1.field != d2.field:
        raise RingMismatch("forms over different fields")
    return DiagForm(field=d1.field, entries=d1.entries + d2.entries)


def tensor(d1: DiagForm, d2: DiagForm) -> DiagForm:
    if d1.field != d2.field:
        raise RingMismatch("forms over different fields")
    entries = tuple(
        square_class_mul(d1.field, a, b) for a in d1.entries for b in d2.entries
    )
    return DiagForm(field=d1.field, entries=entries)


def witt_equal(d1: DiagForm, d2: DiagForm) -> bool:
    """Same Witt class: d1 + (-d2) is hyperbolic."""
    return is_witt_zero(orthogonal_sum(d1, negate(d2)))


def witt_class_display(d: DiagForm) -> str:
    """Short representative for reports: obvious hyperbolic pairs stripped."""
    reduced = _strip_obvious_pairs(d)
    if reduced.rank == 0:
        return "0"
    return str(reduced)


def parse_diag(field: FieldSpec, text: str) -> DiagForm:
    """Parse the comma-separated serialization, e.g. "1,1,-2"."""
    entries = [field.parse_scalar(part) for part in text.split(",")]
    return diag_form(field, entries)
