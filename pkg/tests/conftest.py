import random
from fractions import Fraction

import pytest

from wittdeg import Endo, FieldSpec, Ring, parse_poly


@pytest.fixture
def Q():
    return FieldSpec.rationals()


@pytest.fixture
def F5():
    return FieldSpec.prime_field(5)


@pytest.fixture
def F7():
    return FieldSpec.prime_field(7)


def make_ring(field, *names):
    return Ring(tuple(names), field)


def make_endo(field, names, texts):
    ring = Ring(tuple(names), field)
    return Endo(ring=ring, images=tuple(parse_poly(t, ring) for t in texts))


def counterexample_endo(field):
    """x1 -> x1^2 - x2^2, x2 -> x1*x2, x3 -> x3."""
    return make_endo(field, ("x1", "x2", "x3"), ("x1^2 - x2^2", "x1*x2", "x3"))


def random_poly(rng, ring, max_degree=3, max_terms=4, coeff_range=3):
    """Random sparse polynomial with small integer coefficients."""
    n = ring.nvars
    p = ring.zero()
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(n)] += 1
        c = rng.randint(-coeff_range, coeff_range)
        p = p + ring.monomial(exps, c)
    return p


def random_unit(rng, field, bound=20):
    if field.is_rationals:
        num = rng.choice([k for k in range(-bound, bound + 1) if k])
        den = rng.randint(1, bound)
        return Fraction(num, den)
    return rng.randint(1, field.modulus - 1)
