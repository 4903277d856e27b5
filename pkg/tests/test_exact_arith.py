from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permpat.errors import IntegralityError, InvalidInputError
from permpat.exact_arith import ZERO_DEGREE, UniPoly, as_integer, binomial, poly_eval


@pytest.mark.parametrize("n,k,expected", [(6, 4, 15), (2 * 4 - 2, 4, 15), (5, 9, 0), (-3, 1, 0), (4, -1, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_ballot_cell_from_binomial():
    assert Fraction(3, 5) * binomial(6, 4) == 9


def test_pascal_and_symmetry_up_to_200():
    for n in range(1, 201):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
            assert binomial(n, k) == binomial(n, n - k)


@given(st.integers(min_value=-10**30, max_value=10**30).filter(bool),
       st.integers(min_value=-10**30, max_value=10**30).filter(bool))
def test_rational_arithmetic_is_exact(a, b):
    assert Fraction(a, b) * Fraction(b, a) == 1


def test_poly_eval_examples():
    assert poly_eval(UniPoly.parse("n+1"), 3) == 4
    assert poly_eval(UniPoly.parse("10n^2+42n+41"), 0) == 41
    assert poly_eval(UniPoly(), 17) == 0


def test_trailing_zeros_are_stripped():
    p = UniPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert UniPoly([0, 0]).degree == ZERO_DEGREE
    assert UniPoly([0]) == UniPoly()


def test_polynomial_arithmetic_and_rendering():
    p = UniPoly.parse("n + 4")
    assert p * p == UniPoly([16, 8, 1])
    assert str(p * p) == "n^2 + 8*n + 16"
    assert str(UniPoly([-2, -4])) == "-4*n - 2"
    assert (p - p).is_zero()
    assert poly_eval(UniPoly([Fraction(1, 2), Fraction(1, 2)]), 3) == 2


def test_parse_rejects_non_polynomials():
    with pytest.raises(InvalidInputError):
        UniPoly.parse("1/n")


def test_as_integer():
    assert as_integer(Fraction(10, 2)) == 5
    with pytest.raises(IntegralityError):
        as_integer(Fraction(1, 2))
