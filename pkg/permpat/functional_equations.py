"""Brute-force check of the entry-deletion functional equations.

P_n is the sum of weight monomials over Sₙ.  Deleting one entry of σ and
reducing gives a permutation of length n-1 whose weight, after a variable
substitution and a prefactor that depend only on the deleted value i, is the
weight of σ.  Summing over i expresses P_n through n copies of P_{n-1}; both
sides are built here by enumeration and compared as exact polynomials.

    abc      delete the last entry;  weight q^abc  prod q_j^aj
    cab      delete the first entry; weight q^cab  prod q_j^aj
    abcd     delete the last entry;  weight q^abcd prod_{j>=3} q_j^abj prod_{j>=2} xi_j^aj
    abc+bac  delete the last entry;  weight q^abc xi^bac prod q_j^aj xi_j^ja
"""
import logging
from functools import lru_cache

from permpat import config
from permpat.errors import InvalidInputError, ResourceLimitError
from permpat.perm_core import PatternFamily, iter_permutations, occurrence_profile
from permpat.qpoly import QPolynomial, monomial

log = logging.getLogger(__name__)


def weight_powers(sigma, family):
    family = PatternFamily(family)
    profile = occurrence_profile(sigma, family)
    powers = {"q": profile.phi_main}
    if family is PatternFamily.ABCD:
        powers.update({f"q{j}": e for j, e in profile.phi_abj.items()})
        powers.update({f"xi{j}": e for j, e in profile.phi_aj.items()})
        return powers
    powers.update({f"q{j}": e for j, e in profile.phi_aj.items()})
    if family is PatternFamily.ABC_BAC:
        powers["xi"] = profile.secondary_main
        powers.update({f"xi{j}": e for j, e in profile.phi_ja.items()})
    return powers


def weight_monomial(sigma, family):
    return monomial(weight_powers(sigma, family))


@lru_cache(maxsize=None)
def generating_polynomial(n, family):
    """P_n: sum of weight monomials over Sₙ."""
    family = PatternFamily(family)
    return QPolynomial.from_monomials(weight_monomial(s, family) for s in iter_permutations(n))


def _shift(variable, k, i, grown):
    """Image of an indexed variable of P_{n-1} when value i is inserted."""
    return grown if k < i else {f"{variable}{k + 1}": 1}


def deletion_terms(n, family):
    """(prefactor, substitution) for each deleted value i = 1..n."""
    family = PatternFamily(family)
    terms = []
    for i in range(1, n + 1):
        larger = {j: 1 for j in range(max(i + 1, 2), n + 1)}
        mapping = {"q": {"q": 1}}
        if family is PatternFamily.ABCD:
            prefactor = {f"xi{i}": i - 1}
            for k in range(3, n):
                mapping[f"q{k}"] = _shift("q", k, i, {"q": 1, f"q{k}": 1})
            for k in range(2, n):
                mapping[f"xi{k}"] = _shift("xi", k, i, {f"q{i}": 1, f"xi{k}": 1})
        else:
            if family is PatternFamily.CAB:
                prefactor = {f"q{j}": 1 for j in larger}
            else:
                prefactor = {f"q{i}": i - 1}
            for k in range(2, n):
                mapping[f"q{k}"] = _shift("q", k, i, {"q": 1, f"q{k}": 1})
            if family is PatternFamily.ABC_BAC:
                prefactor.update({f"xi{j}": 1 for j in larger})
                mapping["xi"] = {"xi": 1}
                for k in range(2, n):
                    mapping[f"xi{k}"] = _shift("xi", k, i, {"xi": 1, f"xi{k}": 1})
        terms.append(({v: e for v, e in prefactor.items() if e}, mapping))
    return terms


def right_side(n, family):
    """Sum over deleted values of prefactor * P_{n-1}(substituted variables)."""
    previous = generating_polynomial(n - 1, family)
    total = QPolynomial()
    for prefactor, mapping in deletion_terms(n, family):
        total = total + previous.substitute(mapping).times_monomial(prefactor)
    return total


# equation labels accepted alongside family tags
EQUATIONS = {"eq2": PatternFamily.ABC, "eq18": PatternFamily.CAB, "eq20": PatternFamily.ABCD}


def resolve_family(which):
    """Family for an equation label or a family tag."""
    if which in EQUATIONS:
        return EQUATIONS[which]
    try:
        return PatternFamily(which)
    except ValueError:
        names = ", ".join([*EQUATIONS, *(f.value for f in PatternFamily)])
        raise InvalidInputError(f"unknown functional equation {which!r}; choose from {names}") from None


def functional_equation_ceiling(family):
    if resolve_family(family) is PatternFamily.ABCD:
        return config.ABCD_FUNCTIONAL_EQ_CEILING
    return config.FUNCTIONAL_EQ_CEILING


def check_functional_equation(n, which, ceiling=None):
    """P_n against the deletion sum; which is "eq2", "eq18", "eq20" or a family tag."""
    family = resolve_family(which)
    if n < 1:
        raise InvalidInputError(f"functional equations start at n=1, got {n}")
    limit = functional_equation_ceiling(family) if ceiling is None else ceiling
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds the functional-equation ceiling {limit}")
    holds = generating_polynomial(n, family) == right_side(n, family)
    log.info("Functional equation for %s at n=%d: %s", family.value, n, "holds" if holds else "FAILS")
    return holds
