"""Sparse multivariate polynomials with integer coefficients.

Variables are plain strings: "q", "xi" and indexed ones such as "q3" or "xi5".
A monomial is stored as a sorted tuple of (variable, exponent) pairs with
positive exponents, so equal monomials always have equal keys.
"""
import re
from collections import defaultdict

from permpat.errors import InvalidInputError

_VARIABLE = re.compile(r"([a-z]+)(\d*)$")


def monomial(powers):
    """Canonical key for a {variable: exponent} mapping; zero exponents dropped."""
    return tuple(sorted((v, e) for v, e in powers.items() if e))


def _display_key(variable):
    name, index = _VARIABLE.match(variable).groups()
    return (name, int(index) if index else 0)


class QPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for key, coeff in (terms or {}).items():
            if coeff:
                cleaned[key] = cleaned.get(key, 0) + coeff
        self.terms = {k: c for k, c in cleaned.items() if c}

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def univariate(cls, coeffs, variable="q"):
        return cls({monomial({variable: power}): c for power, c in enumerate(coeffs)})

    @classmethod
    def from_monomials(cls, keys):
        """Sum of monomials, each given as a canonical key; repeats accumulate."""
        counts = defaultdict(int)
        for key in keys:
            counts[key] += 1
        return cls(counts)

    def variables(self):
        return sorted({v for key in self.terms for v, _ in key}, key=_display_key)

    def total(self):
        """Value at all variables = 1."""
        return sum(self.terms.values())

    def coefficients(self, variable="q"):
        """Ascending coefficient list of a polynomial in one variable."""
        extra = set(self.variables()) - {variable}
        if extra:
            raise InvalidInputError(f"not univariate in {variable}: also uses {sorted(extra)}")
        if not self.terms:
            return []
        degree = max(dict(key).get(variable, 0) for key in self.terms)
        out = [0] * (degree + 1)
        for key, coeff in self.terms.items():
            out[dict(key).get(variable, 0)] += coeff
        return out

    def times_monomial(self, powers):
        out = {}
        for key, coeff in self.terms.items():
            merged = dict(key)
            for v, e in powers.items():
                merged[v] = merged.get(v, 0) + e
            out[monomial(merged)] = coeff
        return QPolynomial(out)

    def substitute(self, mapping):
        """Replace each variable by a monomial; unmapped variables stay put."""
        out = defaultdict(int)
        for key, coeff in self.terms.items():
            merged = defaultdict(int)
            for v, e in key:
                for w, f in mapping.get(v, {v: 1}).items():
                    merged[w] += e * f
            out[monomial(merged)] += coeff
        return QPolynomial(out)

    def __add__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) + coeff
        return QPolynomial(out)

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.terms == other.terms

    def __repr__(self):
        return f"QPolynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"

        def order(item):
            key, _ = item
            return (sum(e for _, e in key), [(_display_key(v), e) for v, e in key])

        parts = []
        for key, coeff in sorted(self.terms.items(), key=order):
            factors = [v if e == 1 else f"{v}^{e}" for v, e in sorted(key, key=lambda t: _display_key(t[0]))]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")
