import pytest

from permpat.errors import InvalidInputError, ResourceLimitError
from permpat.functional_equations import (
    EQUATIONS,
    check_functional_equation,
    deletion_terms,
    generating_polynomial,
    resolve_family,
    right_side,
    weight_monomial,
)
from permpat.perm_core import PatternFamily
from permpat.qpoly import QPolynomial, monomial


def test_weight_of_2314():
    assert weight_monomial((2, 3, 1, 4), "abc") == monomial({"q": 1, "q3": 1, "q4": 3})


def test_weight_with_two_patterns():
    assert weight_monomial((2, 1), "abc+bac") == monomial({"xi2": 1})
    assert weight_monomial((2, 1, 3), "abc+bac") == monomial({"xi": 1, "xi2": 1, "q3": 2})


def test_small_polynomials():
    assert generating_polynomial(1, "abc") == QPolynomial.one()
    assert generating_polynomial(2, "cab") == QPolynomial({(): 1, monomial({"q2": 1}): 1})


def test_generating_polynomial_counts_all_permutations():
    for family in ("abc", "cab", "abcd", "abc+bac"):
        assert generating_polynomial(5, family).total() == 120


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("family", ["abc", "cab", "abc+bac"])
def test_entry_deletion_equation(family, n):
    assert check_functional_equation(n, family)


@pytest.mark.parametrize("n", range(1, 7))
def test_entry_deletion_equation_abcd(n):
    assert check_functional_equation(n, "abcd")


def test_wrong_deletion_side_fails():
    # the cab weights do not satisfy the last-entry substitutions
    wrong = QPolynomial()
    previous = generating_polynomial(3, "cab")
    for prefactor, mapping in deletion_terms(4, "abc"):
        wrong = wrong + previous.substitute(mapping).times_monomial(prefactor)
    assert wrong != generating_polynomial(4, "cab")
    assert right_side(4, "cab") == generating_polynomial(4, "cab")


def test_limits():
    with pytest.raises(ResourceLimitError):
        check_functional_equation(8, "abc")
    with pytest.raises(ResourceLimitError):
        check_functional_equation(7, "abcd")
    with pytest.raises(InvalidInputError):
        check_functional_equation(0, "abc")


@pytest.mark.parametrize("label,n,family", [
    ("eq2", 5, PatternFamily.ABC),
    ("eq18", 2, PatternFamily.CAB),
    ("eq2", 1, PatternFamily.ABC),
    ("eq20", 4, PatternFamily.ABCD),
])
def test_equation_labels(label, n, family):
    assert resolve_family(label) is family
    assert check_functional_equation(n, label)


def test_equation_label_ceilings():
    assert set(EQUATIONS) == {"eq2", "eq18", "eq20"}
    with pytest.raises(ResourceLimitError):
        check_functional_equation(7, "eq20")


@pytest.mark.parametrize("which", ["eq3", "abcde", ""])
def test_unknown_equation(which):
    with pytest.raises(InvalidInputError):
        check_functional_equation(3, which)
