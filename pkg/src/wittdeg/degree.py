"""The Witt-group-valued degree of an origin-preserving endomorphism.

Pipeline: validate that the image ideal has a finite-length quotient
supported only at the origin; form the Bezoutian (the determinant of the
divided-difference matrix in primal and dual variables); reduce it modulo
the ideal in both variable blocks; read off the symmetric Gram matrix over
the standard-monomial basis.  Its Witt class is the degree, normalized so
the identity endomorphism has class <1>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ArityMismatch,
    InternalError,
    NotOriginPreserving,
    RingMismatch,
    SupportNotOrigin,
)
from .fields import FieldSpec
from .groebner import (
    GroebnerBasis,
    QuotientAlgebra,
    buchberger,
    normal_form,
    standard_monomials,
    supported_only_at_origin,
)
from .orders import GREVLEX, MonomialOrder
from .poly import Poly, Ring, det, format_monomial, jacobian_det
from .witt import (
    DiagForm,
    GramForm,
    WittInvariants,
    diag_form,
    diagonalize,
    gram_form as make_gram_form,
    invariants,
    is_witt_zero,
    tensor,
)

GENERATOR_NOTE = (
    "class measured against the Koszul-complex generator of the Witt group "
    "with supports at the origin; normalized so the identity endomorphism "
    "has class <1>"
)


@dataclass(frozen=True)
class Endo:
    """An endomorphism of the polynomial ring: variable i maps to images[i]."""

    ring: Ring
    images: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.images) != self.ring.nvars:
            raise ArityMismatch(
                f"{len(self.images)} images for {self.ring.nvars} variables"
            )
        for p in self.images:
            if p.ring != self.ring:
                raise RingMismatch("image in a different ring")

    @property
    def n(self) -> int:
        return self.ring.nvars

    @property
    def field(self) -> FieldSpec:
        return self.ring.field


def validate(endo: Endo, order: MonomialOrder = GREVLEX) -> QuotientAlgebra:
    """Finite-length, origin-supported quotient by the image ideal.

    Raises NotOriginPreserving, NotFiniteLength or SupportNotOrigin.
    """
    for name, p in zip(endo.ring.variables, endo.images):
        if p.constant_term:
            raise NotOriginPreserving(
                f"image of {name} has nonzero constant term"
            )
    gb = buchberger(endo.images, order)
    qa = standard_monomials(gb)
    if not supported_only_at_origin(qa):
        raise SupportNotOrigin("the zero set contains a point besides the origin")
    return qa


def dual_ring(ring: Ring) -> tuple[Ring, list[Poly], list[Poly]]:
    """Ring with dual variables appended; returns (ring2, x_gens, u_gens)."""
    base = "u"
    while any(f"{base}{i + 1}" in ring.variables for i in range(ring.nvars)):
        base += "_"
    names = ring.variables + tuple(f"{base}{i + 1}" for i in range(ring.nvars))
    ring2 = Ring(names, ring.field)
    gens = ring2.gens()
    return ring2, list(gens[: ring.nvars]), list(gens[ring.nvars :])


def _lift(p: Poly, ring2: Ring, offset: int) -> Poly:
    """Reindex a base-ring polynomial into ring2, shifting variables."""
    n = p.ring.nvars
    pad = ring2.nvars - n - offset
    terms = {
        (0,) * offset + e + (0,) * pad: c for e, c in p.terms.items()
    }
    return Poly(ring2, terms)


def bezoutian(endo: Endo) -> Poly:
    """Determinant of the divided-difference matrix, in doubled variables.

    Entry (i, j) is (f_i(u_1..u_{j-1}, x_j..x_n) - f_i(u_1..u_j,
    x_{j+1}..x_n)) / (x_j - u_j); every division is exact.
    """
    n = endo.n
    ring2, xs, us = dual_ring(endo.ring)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            upper = endo.images[i].substitute(us[:j] + xs[j:])
            lower = endo.images[i].substitute(us[: j + 1] + xs[j + 1 :])
            row.append((upper - lower).exact_div(xs[j] - us[j]))
        rows.append(row)
    return det(rows)


def _combined_basis(qa: QuotientAlgebra, ring2: Ring) -> GroebnerBasis:
    """Groebner basis of I(x) + I(u) in the doubled ring.

    The union of the two block bases is already reduced: the blocks are
    disjoint and the global order restricts to the block orders.
    """
    n = qa.ring.nvars
    gx = [_lift(g, ring2, 0) for g in qa.gb.basis]
    gu = [_lift(g, ring2, n) for g in qa.gb.basis]
    combined = sorted(
        gx + gu, key=lambda g: qa.gb.order.key(g.leading(qa.gb.order)[0])
    )
    return GroebnerBasis(
        generators=tuple(combined), basis=tuple(combined), order=qa.gb.order
    )


def gram_form(endo: Endo, order: MonomialOrder = GREVLEX) -> GramForm:
    """Symmetric Gram matrix of the residue pairing over the monomial basis."""
    qa = validate(endo, order)
    return _gram_from_quotient(endo, qa)


def _gram_from_quotient(endo: Endo, qa: QuotientAlgebra) -> GramForm:
    n = endo.n
    field = endo.field
    delta = bezoutian(endo)
    ring2 = delta.ring
    nf = normal_form(delta, _combined_basis(qa, ring2))
    index = {m: k for k, m in enumerate(qa.monomials)}
    d = qa.dimension
    b = [[field.zero for _ in range(d)] for _ in range(d)]
    for e, c in nf.terms.items():
        xe, ue = e[:n], e[n:]
        i, j = index.get(xe), index.get(ue)
        if i is None or j is None:
            raise InternalError("reduced Bezoutian off the standard basis")
        b[i][j] = field.add(b[i][j], c)
    for i in range(d):
        for j in range(i):
            if b[i][j] != b[j][i]:
                raise InternalError("Bezoutian Gram matrix is not symmetric")
    labels = tuple(format_monomial(endo.ring, m) for m in qa.monomials)
    return make_gram_form(field, b, labels)


@dataclass(frozen=True)
class DegreeReport:
    """deg(g) in the Witt group, with divisibility verdicts."""

    field: FieldSpec
    n: int
    length: int
    gram: GramForm
    diag: DiagForm
    invariants: WittInvariants
    is_zero: bool
    divisible_by_n_factorial: bool
    divisible_by_nminus1_factorial: bool
    generator_note: str = GENERATOR_NOTE

    def to_json_dict(self) -> dict:
        fmt = self.field.format_scalar
        return {
            "schema": 1,
            "field": str(self.field),
            "n": self.n,
            "length": self.length,
            "gram": [[fmt(x) for x in row] for row in self.gram.matrix],
            "diagonal": [fmt(e) for e in self.diag.entries],
            "rank": self.invariants.rank,
            "signature": self.invariants.signature,
            "signed_discriminant": fmt(self.invariants.signed_discriminant),
            "hasse": dict(self.invariants.hasse),
            "is_zero": self.is_zero,
            "nori_n_factorial": self.divisible_by_n_factorial,
            "nori_nminus1_factorial": self.divisible_by_nminus1_factorial,
        }


def degree_of(endo: Endo, order: MonomialOrder = GREVLEX) -> DegreeReport:
    """Full degree computation; raises as validate does."""
    qa = validate(endo, order)
    gram = _gram_from_quotient(endo, qa)
    diag = diagonalize(gram)
    inv = invariants(diag)
    n = endo.n
    d = qa.dimension
    return DegreeReport(
        field=endo.field,
        n=n,
        length=d,
        gram=gram,
        diag=diag,
        invariants=inv,
        is_zero=is_witt_zero(diag),
        divisible_by_n_factorial=d % math.factorial(n) == 0,
        divisible_by_nminus1_factorial=d % math.factorial(max(n - 1, 1)) == 0,
    )


def univariate_power_form(field: FieldSpec, m: int) -> DiagForm:
    """Witt-normal diagonal form of the one-variable power map x -> x^m.

    The Gram matrix is the m x m antidiagonal of ones: floor(m/2) hyperbolic
    planes plus, for odd m, one <1>.
    """
    entries = [field.one] * (m % 2)
    for _ in range(m // 2):
        entries.extend([field.one, field.from_int(-1)])
    return diag_form(field, entries)


def univariate_tensor_oracle(field: FieldSpec, ms: Sequence[int]) -> DiagForm:
    """Independent oracle for separated-variable maps x_i -> x_i^{m_i}.

    The quotient algebra and its pairing factor as tensor products, so the
    class is the tensor product of the univariate forms; rank prod(m_i).
    """
    if not ms:
        raise ArityMismatch("need at least one exponent")
    result = diag_form(field, [field.one])
    for m in ms:
        result = tensor(result, univariate_power_form(field, m))
    return result


def power_endo(field: FieldSpec, ms: Sequence[int]) -> Endo:
    """The separated-variable endomorphism x_i -> x_i^{m_i}."""
    ring = Ring(tuple(f"x{i + 1}" for i in range(len(ms))), field)
    images = tuple(
        ring.monomial(tuple(m if j == i else 0 for j in range(len(ms))))
        for i, m in enumerate(ms)
    )
    return Endo(ring=ring, images=images)


def diagonal_bezoutian_identity(endo: Endo) -> bool:
    """Check Delta(x, x) == det(Jacobian) exactly."""
    delta = bezoutian(endo)
    xs = list(endo.ring.gens())
    return delta.substitute(xs + xs) == jacobian_det(list(endo.images))
