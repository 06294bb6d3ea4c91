import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycontract.poly import (
    MultiPoly,
    NonHomogeneousError,
    ParseError,
    PolyRing,
    RingMismatchError,
    jacobian_generators,
    monomials_of_degree,
    poly_parse,
    poly_print,
    random_homogeneous,
    weighted_degree,
)

QQ3 = PolyRing(3)
GF5_2 = PolyRing(2, 5)
GF_2 = PolyRing(2, 32003)


def test_parse_simple():
    f = poly_parse("x0^2 - 2*x1*x2", QQ3)
    assert len(f) == 2
    assert f.coefficient((2, 0, 0)) == 1
    assert f.coefficient((0, 1, 1)) == -2


def test_parse_zero():
    assert poly_parse("0", QQ3).is_zero()


def test_parse_normalizes():
    assert poly_parse("x0*x0", QQ3) == poly_parse("x0^2", QQ3)


def test_parse_fractions_and_implicit_product():
    f = poly_parse("1/2*x0 + 3x1", QQ3)
    assert f.coefficient((1, 0, 0)) == Fraction(1, 2)
    assert f.coefficient((0, 1, 0)) == 3


def test_parse_cancellation():
    assert poly_parse("x0 - x0", QQ3).is_zero()


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        poly_parse("x0 + x9", QQ3)
    assert err.value.position == 5
    with pytest.raises(ParseError):
        poly_parse("x0 + + x1", QQ3)
    with pytest.raises(ParseError):
        poly_parse("", QQ3)
    with pytest.raises(ParseError):
        poly_parse("2/0", QQ3)


def test_print_canonical_form():
    f = poly_parse("-2*x1*x2 + x0^2", QQ3)
    assert poly_print(f) == "x0^2 - 2*x1*x2"
    assert poly_print(MultiPoly.zero(QQ3)) == "0"


def _random_poly(ring, rng, max_terms=6, max_exp=4):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        exp = tuple(rng.randrange(max_exp) for _ in range(ring.nvars))
        if ring.prime is None:
            terms[exp] = Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
        else:
            terms[exp] = rng.randrange(ring.prime)
    return MultiPoly(ring, terms)


@pytest.mark.parametrize("ring", [QQ3, GF5_2, GF_2])
def test_parse_print_roundtrip_random(ring):
    rng = random.Random(f"roundtrip:{ring.prime}")
    for _ in range(200):
        f = _random_poly(ring, rng)
        assert poly_parse(poly_print(f), ring) == f


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(0, 5), st.integers(0, 5))
@settings(max_examples=60, deadline=None)
def test_roundtrip_hypothesis(c1, c2, e1, e2):
    f = MultiPoly(QQ3, {(e1, 0, 0): c1, (0, e2, 1): c2})
    assert poly_parse(poly_print(f), QQ3) == f


@pytest.mark.parametrize("ring", [PolyRing(3), PolyRing(3, 32003), PolyRing(2, 5)])
def test_ring_axioms_random_triples(ring):
    rng = random.Random(f"axioms:{ring.prime}")
    for _ in range(350):
        a, b, c = (_random_poly(ring, rng, max_terms=4, max_exp=3) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_additive_and_multiplicative_identities():
    rng = random.Random(3)
    f = _random_poly(QQ3, rng)
    assert f + MultiPoly.zero(QQ3) == f
    assert f * MultiPoly.constant(QQ3, 1) == f


def test_gf5_product():
    f = poly_parse("2*x0", GF5_2) * poly_parse("3*x0", GF5_2)
    assert f == poly_parse("x0^2", GF5_2)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        poly_parse("x0", QQ3) + poly_parse("x0", GF5_2)


# -- weighted degrees ---------------------------------------------------------


def test_weighted_degree_sextic():
    ring = PolyRing(5, weights=(1, 1, 1, 2, 3))
    f = poly_parse("x0^6 + x3^3", ring)
    assert weighted_degree(f) == 6


def test_weighted_degree_standard():
    assert weighted_degree(poly_parse("x0*x1", PolyRing(2))) == 2


def test_weighted_degree_errors():
    ring = PolyRing(2)
    with pytest.raises(NonHomogeneousError) as err:
        weighted_degree(poly_parse("x0 + x1^2", ring))
    assert len(err.value.terms) == 2
    with pytest.raises(ValueError):
        weighted_degree(MultiPoly.zero(ring))


def test_degree_multiplicative_on_homogeneous():
    ring = PolyRing(3, 32003, weights=(1, 2, 3))
    rng = random.Random(9)
    for _ in range(50):
        f = random_homogeneous(rng.randrange(1, 7), ring, rng.randrange(10**6))
        g = random_homogeneous(rng.randrange(1, 7), ring, rng.randrange(10**6))
        if f.is_zero() or g.is_zero():
            continue
        assert weighted_degree(f * g) == weighted_degree(f) + weighted_degree(g)


# -- seeded generic polynomials -----------------------------------------------


def test_random_homogeneous_support():
    ring = PolyRing(5, 32003)
    assert len(monomials_of_degree(ring, 2)) == 15
    f = random_homogeneous(2, ring, 4)
    assert 0 < len(f) <= 15
    assert weighted_degree(f) == 2


def test_random_homogeneous_deterministic():
    ring = PolyRing(4, 32003)
    assert random_homogeneous(3, ring, 7) == random_homogeneous(3, ring, 7)
    assert random_homogeneous(3, ring, 7) != random_homogeneous(3, ring, 8)


def test_random_homogeneous_degree_zero_and_rational_error():
    ring = PolyRing(2, 101)
    f = random_homogeneous(0, ring, 1)
    assert len(f) <= 1
    with pytest.raises(ValueError):
        random_homogeneous(2, PolyRing(2), 1)


def test_random_homogeneous_weighted():
    ring = PolyRing(5, 32003, weights=(1, 1, 1, 2, 3))
    f = random_homogeneous(6, ring, 2)
    assert weighted_degree(f) == 6


# -- singular-locus generators ------------------------------------------------


def test_jacobian_single_poly():
    ring = PolyRing(1)
    gens = jacobian_generators([poly_parse("x0^2", ring)])
    assert gens == [poly_parse("x0^2", ring), poly_parse("2*x0", ring)]


def test_jacobian_two_coordinates():
    ring = PolyRing(2)
    gens = jacobian_generators([poly_parse("x0", ring), poly_parse("x1", ring)])
    assert gens == [poly_parse("x0", ring), poly_parse("x1", ring), MultiPoly.constant(ring, 1)]


def test_jacobian_minor_count():
    ring = PolyRing(5, 32003)
    c1 = random_homogeneous(3, ring, 1)
    c2 = random_homogeneous(3, ring, 2)
    gens = jacobian_generators([c1, c2])
    assert len(gens) == 2 + 10  # the polynomials plus all 2x2 minors


def test_jacobian_needs_input():
    with pytest.raises(ValueError):
        jacobian_generators([])


def test_substitutions():
    ring = PolyRing(3, 32003)
    f = poly_parse("x0^2*x2 + x1", ring)
    aff = f.substitute_one(2)
    assert aff == poly_parse("x0^2 + x1", PolyRing(2, 32003))
    inf = f.substitute_zero(2)
    assert inf == poly_parse("x1", PolyRing(2, 32003))
