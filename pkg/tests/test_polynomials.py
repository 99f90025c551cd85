import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mfcat.errors import (
    ExponentOverflowError,
    MalformedRationalError,
    PolynomialSyntaxError,
)
from mfcat.polynomials import (
    Polynomial,
    canonical_string,
    parse_polynomial,
    random_polynomial,
)

from support import naive_mul


def test_parse_sum_of_squares():
    p = parse_polynomial("x^2 + y^2")
    assert p.terms == {
        (("x", 2),): Fraction(1),
        (("y", 2),): Fraction(1),
    }


def test_parse_zero_literal():
    assert parse_polynomial("0").is_zero()


def test_parse_cancellation():
    assert parse_polynomial("2*x - x - x").is_zero()


def test_canonical_examples():
    assert canonical_string(parse_polynomial("y^2 + x^2")) == "x^2 + y^2"
    assert canonical_string(Polynomial.zero()) == "0"
    assert canonical_string(parse_polynomial("3/2*x*y")) == "3/2*x*y"


def test_canonical_grlex_order():
    p = parse_polynomial("1 + x + y^2 + x*y + x^2")
    assert canonical_string(p) == "x^2 + x*y + y^2 + x + 1"


def test_canonical_negative_leading_term():
    p = parse_polynomial("-x^2 - 5/3")
    assert canonical_string(p) == "-x^2 - 5/3"
    assert parse_polynomial(canonical_string(p)) == p


def test_parse_implicit_coefficient_star():
    assert parse_polynomial("2x") == parse_polynomial("2*x")


def test_parse_repeated_variable_multiplies():
    assert parse_polynomial("x*x") == parse_polynomial("x^2")


def test_parse_exponent_zero_folds_to_constant():
    assert parse_polynomial("x^0") == Polynomial.one()


def test_syntax_error_carries_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial("x + @")
    assert info.value.position == 4


def test_unexpected_trailing_token():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x y")


def test_malformed_rational():
    with pytest.raises(MalformedRationalError):
        parse_polynomial("3/0")
    with pytest.raises(MalformedRationalError):
        parse_polynomial("3/")


def test_exponent_overflow():
    with pytest.raises(ExponentOverflowError):
        parse_polynomial("x^9999999")


def test_empty_input_rejected():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("   ")


def test_addition_identity_and_cancellation():
    p = parse_polynomial("x^2 + y^2")
    assert p + Polynomial.zero() == p
    assert parse_polynomial("x + y") + parse_polynomial("x - y") == parse_polynomial("2*x")


def test_multiplication_examples():
    assert parse_polynomial("x + y") * parse_polynomial("x - y") == parse_polynomial("x^2 - y^2")
    p = parse_polynomial("x^2 + 3*y")
    assert p * Polynomial.one() == p
    # single-term product, checked against term-by-term expansion
    lhs = parse_polynomial("x^2") * parse_polynomial("y^2")
    assert lhs == naive_mul(parse_polynomial("x^2"), parse_polynomial("y^2"))
    assert lhs == parse_polynomial("x^2*y^2")


def _random_poly_strategy():
    coeffs = st.fractions(
        min_value=Fraction(-4), max_value=Fraction(4), max_denominator=3
    )
    exps = st.dictionaries(st.sampled_from("xyz"), st.integers(1, 3), max_size=3)
    term = st.tuples(coeffs, exps)
    return st.lists(term, max_size=4).map(
        lambda terms: sum(
            (
                Polynomial({tuple(sorted(exps.items())): coeff})
                for coeff, exps in terms
                if coeff != 0
            ),
            Polynomial.zero(),
        )
    )


@given(_random_poly_strategy())
def test_parse_canonical_round_trip(p):
    assert parse_polynomial(canonical_string(p)) == p


@given(_random_poly_strategy(), _random_poly_strategy())
def test_mul_matches_naive_expansion(p, q):
    assert p * q == naive_mul(p, q)


def test_ring_laws_on_random_triples():
    # associativity, commutativity and distributivity, exact, >= 1000 triples
    rng = random.Random(20240)
    for _ in range(1000):
        p = random_polynomial(rng, max_degree=4, max_terms=3)
        q = random_polynomial(rng, max_degree=4, max_terms=3)
        r = random_polynomial(rng, max_degree=4, max_terms=3)
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r


def test_no_zero_coefficients_after_operations():
    rng = random.Random(99)
    for _ in range(200):
        p = random_polynomial(rng, max_degree=3, max_terms=3)
        q = random_polynomial(rng, max_degree=3, max_terms=3)
        for result in (p + q, p - q, p * q, -p, p - p):
            assert all(c != 0 for c in result.terms.values())
            result._audit()


def test_constant_helpers():
    assert Polynomial.constant(0).is_zero()
    assert Polynomial.constant(Fraction(7, 2)).constant_value() == Fraction(7, 2)
    assert Polynomial.variable("x", 0) == Polynomial.one()
    with pytest.raises(ValueError):
        parse_polynomial("x + 1").constant_value()


def test_total_degree_and_variables():
    p = parse_polynomial("x^2*y + z - 4")
    assert p.total_degree() == 3
    assert p.variables() == {"x", "y", "z"}
