"""Exact integers, rationals, binomials and univariate polynomials in n.

Python ints are unbounded and Fraction keeps itself in lowest terms with a
positive denominator, so those two types are used directly everywhere.
"""
import math
from fractions import Fraction

import sympy as sp
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import BasePolynomialError

from permpat.errors import IntegralityError, InvalidInputError

ZERO_DEGREE = -1
TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication_application)


def binomial(n, k):
    """C(n, k), with 0 whenever k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_integer(value, context="value"):
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{context} = {value} is not an integer")
    return value.numerator


class UniPoly:
    """Polynomial in n with Fraction coefficients, index = power of n."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def parse(cls, text, variable="n"):
        """Read "10n^2+42n+41" or "10*n**2 + 42*n + 41"."""
        symbol = sp.Symbol(variable)
        try:
            expr = parse_expr(text, local_dict={variable: symbol}, transformations=TRANSFORMATIONS)
            poly = sp.Poly(sp.expand(expr), symbol)
        except (sp.SympifyError, BasePolynomialError, SyntaxError, TypeError) as e:
            raise InvalidInputError(f"not a polynomial in {variable}: {text!r}") from e
        return cls.from_sympy(poly)

    @classmethod
    def from_sympy(cls, poly):
        return cls(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs()))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self):
        return not self.coeffs

    def __call__(self, n):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "n" if power == 1 else f"n^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def poly_eval(p, n):
    """Exact Horner evaluation of p at n."""
    return p(n)
