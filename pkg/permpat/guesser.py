"""Fit linear recurrences with polynomial coefficients to integer sequences.

A candidate of order r and degree d is the kernel of the homogeneous system

    sum_{i=0..r} p_i(n) a(n+i) = 0,   one equation per window index n,

in the (r+1)(d+1) coefficients of p_0..p_r, solved exactly over the rationals.
The last `holdout` equations are kept out of the fit and must be satisfied by
the candidate afterwards.
"""
import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce as fold
from typing import List, Optional, Tuple

import sympy as sp
from sympy.core.function import AppliedUndef
from sympy.parsing.sympy_parser import parse_expr

from permpat import config
from permpat.errors import (
    InsufficientTermsError,
    IntegralityError,
    InvalidInputError,
    SingularityError,
)
from permpat.exact_arith import TRANSFORMATIONS, UniPoly

log = logging.getLogger(__name__)


def _primitive(values):
    """Scale rationals to coprime integers with the same ratios."""
    values = [Fraction(v) for v in values]
    denominator = fold(lambda a, b: a * b // math.gcd(a, b), (v.denominator for v in values), 1)
    ints = [int(v * denominator) for v in values]
    content = fold(math.gcd, ints, 0)
    return [v // content for v in ints] if content else ints


class PRecurrence:
    """sum_i p_i(n) a(n+i) = 0 with primitive integer coefficients, p_r leading coefficient > 0."""

    def __init__(self, coeffs):
        polys = [c if isinstance(c, UniPoly) else UniPoly(c) for c in coeffs]
        if len(polys) < 2:
            raise InvalidInputError("a recurrence needs order >= 1")
        if polys[-1].is_zero():
            raise InvalidInputError("leading polynomial p_r must be nonzero")
        width = max(p.degree for p in polys) + 1
        flat = [c for p in polys for c in p.coeffs + (0,) * (width - len(p.coeffs))]
        flat = _primitive(flat)
        rows = [flat[i * width:(i + 1) * width] for i in range(len(polys))]
        if rows[-1][polys[-1].degree] < 0:
            rows = [[-c for c in row] for row in rows]
        self.coeffs = tuple(UniPoly(row) for row in rows)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def degree(self):
        return max(p.degree for p in self.coeffs)

    def integer_coeffs(self):
        return [[int(c) for c in p.coeffs] for p in self.coeffs]

    def residual(self, seq, n, start_index=0):
        m = n - start_index
        return sum(p(n) * seq[m + i] for i, p in enumerate(self.coeffs))

    def __eq__(self, other):
        return isinstance(other, PRecurrence) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PRecurrence({self})"

    def __str__(self):
        pieces = []
        for i in range(self.order, -1, -1):
            p = self.coeffs[i]
            if p.is_zero():
                continue
            negative = p.coeffs[-1] < 0
            magnitude = -p if negative else p
            shift = "a(n)" if i == 0 else f"a(n+{i})"
            text = str(magnitude)
            if text == "1":
                term = shift
            elif len(magnitude.coeffs) == 1:
                term = f"{text}*{shift}"
            else:
                term = f"({text})*{shift}"
            pieces.append((negative, term))
        body = pieces[0][1]
        for negative, term in pieces[1:]:
            body += (" - " if negative else " + ") + term
        return f"{body} = 0"

    def to_json(self):
        return json.dumps({"order": self.order, "degree": self.degree,
                           "coeffs": [[str(c) for c in row] for row in self.integer_coeffs()]})

    @classmethod
    def from_json(cls, text):
        try:
            document = json.loads(text)
            return cls([[int(c) for c in row] for row in document["coeffs"]])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"not a recurrence document: {e}") from e

    @classmethod
    def parse(cls, text):
        """Read "lhs = rhs" in a(n), a(n+1), ... with rational-function coefficients in n."""
        n = sp.Symbol("n")
        a = sp.Function("a")
        lhs, _, rhs = text.partition("=")
        try:
            local = {"n": n, "a": a}
            expr = (parse_expr(lhs, local_dict=local, transformations=TRANSFORMATIONS)
                    - parse_expr(rhs or "0", local_dict=local, transformations=TRANSFORMATIONS))
        except (sp.SympifyError, SyntaxError, TypeError) as e:
            raise InvalidInputError(f"cannot read recurrence {text!r}") from e
        shifts = {}
        for atom in expr.atoms(AppliedUndef):
            offset = sp.simplify(atom.args[0] - n)
            if atom.func != a or not offset.is_Integer or offset < 0:
                raise InvalidInputError(f"unexpected term {atom} in {text!r}")
            shifts[int(offset)] = sp.cancel(sp.diff(expr, atom))
        if not shifts or min(shifts) != 0:
            raise InvalidInputError(f"recurrence must involve a(n): {text!r}")
        denominator = sp.lcm([sp.fraction(c)[1] for c in shifts.values()])
        polys = []
        for i in range(max(shifts) + 1):
            numerator = sp.cancel(shifts.get(i, sp.Integer(0)) * denominator)
            polys.append(UniPoly.from_sympy(sp.Poly(numerator, n)))
        return cls(polys)


def equivalent(r1, r2):
    return r1.integer_coeffs() == r2.integer_coeffs()


def apply(rec, initial, count, start_index=0):
    """initial followed by count more terms generated by the recurrence."""
    if len(initial) != rec.order:
        raise InvalidInputError(f"need {rec.order} initial terms, got {len(initial)}")
    seq = [int(x) for x in initial]
    lead = rec.coeffs[-1]
    for _ in range(count):
        n = start_index + len(seq) - rec.order
        denominator = lead(n)
        if denominator == 0:
            raise SingularityError(f"leading coefficient {lead} vanishes at n={n}")
        value = -sum(rec.coeffs[i](n) * seq[len(seq) - rec.order + i] for i in range(rec.order)) / denominator
        if value.denominator != 1:
            raise IntegralityError(f"term a({n + rec.order}) = {value} is not an integer")
        seq.append(value.numerator)
    return seq


@dataclass
class GuessReport:
    input_length: int
    start_index: int
    max_order: int
    max_degree: int
    holdout: int
    found: Optional[PRecurrence] = None
    validated_terms: int = 0
    searched: List[Tuple[int, int]] = field(default_factory=list)

    def to_dict(self):
        return {"input_length": self.input_length, "start_index": self.start_index,
                "max_order": self.max_order, "max_degree": self.max_degree, "holdout": self.holdout,
                "found": json.loads(self.found.to_json()) if self.found else None,
                "recurrence": str(self.found) if self.found else None,
                "validated_terms": self.validated_terms, "searched": [list(c) for c in self.searched]}


def required_terms(max_order, max_degree, holdout):
    return (max_order + 1) * (max_degree + 1) + max_order + holdout


def _kernel(seq, start_index, order, degree, rows):
    matrix = sp.Matrix([[sp.Integer(start_index + m) ** e * seq[m + i]
                         for i in range(order + 1) for e in range(degree + 1)]
                        for m in range(rows)])
    return [[Fraction(int(x.p), int(x.q)) for x in vector] for vector in matrix.nullspace()]


def _candidate(vector, order, degree):
    polys = [vector[i * (degree + 1):(i + 1) * (degree + 1)] for i in range(order + 1)]
    if not any(polys[-1]):
        return None
    return PRecurrence(polys)


def guess(seq, start_index=0, max_order=config.DEFAULT_MAX_ORDER,
          max_degree=config.DEFAULT_MAX_DEGREE, holdout=config.DEFAULT_HOLDOUT):
    """Smallest (order, then degree) recurrence annihilating every supplied term."""
    seq = [int(x) for x in seq]
    needed = required_terms(max_order, max_degree, holdout)
    if len(seq) < needed:
        raise InsufficientTermsError(needed, len(seq))
    report = GuessReport(len(seq), start_index, max_order, max_degree, holdout)
    for order in range(1, max_order + 1):
        equations = len(seq) - order
        fit_rows = equations - holdout
        for degree in range(max_degree + 1):
            if fit_rows < (order + 1) * (degree + 1):
                continue
            report.searched.append((order, degree))
            survivors = []
            for vector in _kernel(seq, start_index, order, degree, fit_rows):
                rec = _candidate(vector, order, degree)
                if rec is None:
                    continue
                checks = range(start_index + fit_rows, start_index + equations)
                if all(rec.residual(seq, n, start_index) == 0 for n in checks):
                    survivors.append((sum(1 for c in vector if c), rec.integer_coeffs(), rec))
            if survivors:
                report.found = min(survivors, key=lambda s: (s[0], s[1]))[2]
                report.validated_terms = holdout
                log.info("Found order %d degree %d recurrence: %s", order, degree, report.found)
                return report
            log.debug("No recurrence of order %d and degree %d", order, degree)
    return report
