import itertools
import random

import pytest

from wittdeg import (
    GREVLEX,
    LEX,
    NotFiniteLength,
    Ring,
    buchberger,
    contains_one_with_certificate,
    normal_form,
    parse_poly,
    standard_monomials,
    supported_only_at_origin,
)

from conftest import random_poly


@pytest.fixture
def R2(Q):
    return Ring(("x", "y"), Q)


@pytest.fixture
def cross_gb(R2):
    """Reduced basis of (x^2 - y^2, xy)."""
    return buchberger([parse_poly("x^2 - y^2", R2), parse_poly("x*y", R2)])


def test_buchberger_example(R2, cross_gb):
    expected = {
        parse_poly("x^2 - y^2", R2),
        parse_poly("x*y", R2),
        parse_poly("y^3", R2),
    }
    assert set(cross_gb.basis) == expected


def test_buchberger_single_generator(R2):
    gb = buchberger([R2.var(0)])
    assert gb.basis == (R2.var(0),)


def test_buchberger_char_zero_halving(R2):
    x, y = R2.gens()
    gb = buchberger([x + y, x - y])
    assert set(gb.basis) == {x, y}


def test_buchberger_permutation_stable(R2, Q):
    gens = [
        parse_poly("x^2 - y^2", R2),
        parse_poly("x*y", R2),
        parse_poly("x^3 + y", R2),
    ]
    bases = set()
    for perm in itertools.permutations(gens):
        bases.add(buchberger(list(perm)).basis)
    assert len(bases) == 1


def test_normal_form_examples(R2, cross_gb):
    x, y = R2.gens()
    assert normal_form(x**2, cross_gb) == y**2
    assert normal_form(x**3, cross_gb).is_zero
    q = parse_poly("x + 2", R2)
    assert normal_form(q, cross_gb) == q


def test_normal_form_properties_random(Q):
    rng = random.Random(31337)
    for nvars in (2, 3):
        ring = Ring(tuple("xyz"[:nvars]), Q)
        for _ in range(15):
            gens = [random_poly(rng, ring) for _ in range(2)]
            gens = [g for g in gens if not g.is_zero]
            if not gens:
                continue
            gb = buchberger(gens)
            if not gb.basis:
                continue
            f = random_poly(rng, ring)
            g = random_poly(rng, ring)
            nf = lambda p: normal_form(p, gb)
            assert nf(f * g) == nf(nf(f) * nf(g))
            assert nf(nf(f)) == nf(f)
            assert nf(f - nf(f)).is_zero
            # linearity
            assert nf(f + g) == nf(f) + nf(g)


def test_standard_monomials_example(R2, cross_gb):
    qa = standard_monomials(cross_gb)
    assert qa.dimension == 4
    assert qa.monomials == ((0, 0), (0, 1), (1, 0), (0, 2))


def test_standard_monomials_point(Q):
    ring = Ring(("x1", "x2", "x3"), Q)
    qa = standard_monomials(buchberger(list(ring.gens())))
    assert qa.dimension == 1
    assert qa.monomials == ((0, 0, 0),)


def test_standard_monomials_infinite(R2):
    gb = buchberger([R2.var(0)])
    with pytest.raises(NotFiniteLength):
        standard_monomials(gb)


def test_dimension_order_independent(Q):
    systems = [
        ("x^2 - y^2", "x*y"),
        ("x^3", "y^2"),
        ("x^2 + y", "y^3 - x"),
        ("x + y", "y^4"),
    ]
    ring = Ring(("x", "y"), Q)
    for texts in systems:
        gens = [parse_poly(t, ring) for t in texts]
        d1 = standard_monomials(buchberger(gens, GREVLEX)).dimension
        d2 = standard_monomials(buchberger(gens, LEX)).dimension
        assert d1 == d2


def test_supported_only_at_origin(R2, cross_gb, Q):
    assert supported_only_at_origin(standard_monomials(cross_gb))
    away = buchberger([parse_poly("x^2 - x", R2), R2.var(1)])
    assert not supported_only_at_origin(standard_monomials(away))
    ring = Ring(("x1", "x2", "x3"), Q)
    point = standard_monomials(buchberger(list(ring.gens())))
    assert supported_only_at_origin(point)


def test_contains_one_trivial_cases(R2, Q):
    x, y = R2.gens()
    cert = contains_one_with_certificate([x, R2.one() - x])
    assert cert == (R2.one(), R2.one())
    ring = Ring(("x1", "x2", "x3"), Q)
    assert contains_one_with_certificate(list(ring.gens())) is None


def test_contains_one_with_relation(Q):
    ring = Ring(("x1", "x2", "x3", "y1", "y2", "y3"), Q)
    gens = [
        parse_poly("x1^2 - x2^2", ring),
        parse_poly("x1*x2", ring),
        parse_poly("x3", ring),
        parse_poly("x1*y1 + x2*y2 + x3*y3 - 1", ring),
    ]
    cert = contains_one_with_certificate(gens)
    assert cert is not None
    total = ring.zero()
    for c, g in zip(cert, gens):
        total = total + c * g
    assert total == ring.one()


def test_monomial_order_axioms():
    rng = random.Random(140)
    for order in (GREVLEX, LEX):
        # well-founded: the constant monomial is minimal
        samples = [
            tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(50)
        ]
        assert all(order.key((0, 0, 0)) <= order.key(m) for m in samples)
        for _ in range(200):
            a, b, c = (
                tuple(rng.randint(0, 5) for _ in range(3)) for _ in range(3)
            )
            # totality: keys of distinct monomials differ
            if a != b:
                assert order.key(a) != order.key(b)
            # multiplicativity: a < b implies a+c < b+c
            if order.key(a) < order.key(b):
                ac = tuple(x + y for x, y in zip(a, c))
                bc = tuple(x + y for x, y in zip(b, c))
                assert order.key(ac) < order.key(bc)


def test_basis_is_autoreduced_and_spolys_vanish(Q):
    ring = Ring(("x", "y", "z"), Q)
    gens = [
        parse_poly("x^2 - y*z", ring),
        parse_poly("x*y - z", ring),
        parse_poly("y^2 + x*z", ring),
    ]
    gb = buchberger(gens)
    leads = [g.leading(gb.order)[0] for g in gb.basis]
    for i, g in enumerate(gb.basis):
        for e in g.terms:
            assert not any(
                all(a <= b for a, b in zip(le, e))
                for j, le in enumerate(leads)
                if j != i
            )
    for i in range(len(gb.basis)):
        for j in range(i + 1, len(gb.basis)):
            li, lj = leads[i], leads[j]
            lcm = tuple(max(a, b) for a, b in zip(li, lj))
            mi = ring.monomial(tuple(a - b for a, b in zip(lcm, li)))
            mj = ring.monomial(tuple(a - b for a, b in zip(lcm, lj)))
            s = mi * gb.basis[i] - mj * gb.basis[j]
            assert normal_form(s, gb).is_zero


def test_cofactor_identities_hold(Q):
    rng = random.Random(606)
    ring = Ring(("x", "y"), Q)
    for _ in range(10):
        gens = [random_poly(rng, ring, max_degree=2) for _ in range(2)]
        gens = [g for g in gens if not g.is_zero]
        if not gens:
            continue
        gb = buchberger(gens, track_cofactors=True)
        for basis_elt, cof in zip(gb.basis, gb.cofactors):
            total = ring.zero()
            for c, g in zip(cof, gens):
                total = total + c * g
            assert total == basis_elt
