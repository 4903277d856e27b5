"""Explicit binomial formulas and their comparison with the engines.

ballot and g are proved identities for the abc and abc-one tables; a2_abc,
a1_cab and the abcd three-term recurrence are conjectures checked numerically.
"""
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List

from permpat.engines import abcd_P, build_table
from permpat.errors import DomainError, InvalidInputError
from permpat.exact_arith import as_integer, binomial

log = logging.getLogger(__name__)

PROVED = "proved"
CONJECTURE = "conjecture"


def ballot(n, I):
    """(I+1)/(n+1) C(2n-I, n); I = 0 is read as I = 1."""
    if n < 0 or I < 0 or I > n:
        raise DomainError(f"need 0 <= I <= n, got n={n}, I={I}")
    if I == 0 and n >= 1:
        I = 1
    return as_integer(Fraction(I + 1, n + 1) * binomial(2 * n - I, n), f"ballot({n},{I})")


def g(n, I):
    return (binomial(2 * n - I - 1, n) - binomial(2 * n - I - 1, n + 3)
            + binomial(2 * n - 2 * I - 2, n - I - 4) - binomial(2 * n - 2 * I - 2, n - I - 1)
            + binomial(2 * n - 2 * I - 3, n - I - 4) - binomial(2 * n - 2 * I - 3, n - I - 2))


def _positive(n):
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")


def a1_abc(n):
    """Permutations with exactly one abc: 3/n C(2n, n+3)."""
    _positive(n)
    return as_integer(Fraction(3, n) * binomial(2 * n, n + 3), f"a1_abc({n})")


def a2_abc(n):
    """Permutations with exactly two abc (conjectured)."""
    _positive(n)
    value = Fraction(59 * n * n + 117 * n + 100, 2 * n * (2 * n - 1) * (n + 5)) * binomial(2 * n, n - 4)
    return as_integer(value, f"a2_abc({n})")


def a1_cab(n):
    """Permutations with exactly one cab (conjectured): (n-2)/(2n) C(2n-2, n-1)."""
    _positive(n)
    if n < 2:
        return 0
    return as_integer(Fraction(n - 2, 2 * n) * binomial(2 * n - 2, n - 1), f"a1_cab({n})")


def a1234_recurrence_check(n_max, sequence=None):
    """(n+4)^2 a(n+2) = (10n^2+42n+41) a(n+1) - 9(n+1)^2 a(n) for 0 <= n <= n_max-2."""
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    if sequence is None:
        sequence = [abcd_P(n, min(n, 1), min(n, 1)) for n in range(n_max + 1)]
    for n in range(n_max - 1):
        lhs = Fraction((n + 4) ** 2 * sequence[n + 2])
        rhs = Fraction((10 * n * n + 42 * n + 41) * sequence[n + 1] - 9 * (n + 1) ** 2 * sequence[n])
        if lhs != rhs:
            log.info("abcd recurrence fails at n=%d", n)
            return False
    return True


@dataclass(frozen=True)
class ClosedForm:
    name: str
    evaluator: Callable
    family: str
    status: str
    arity: int
    first_n: int = 0

    def cells(self, n_max):
        """(engine cell, formula value) pairs on the claimed domain."""
        for n in range(self.first_n, n_max + 1):
            if self.arity == 2:
                for I in range(n + 1):
                    yield (n, I), self.evaluator(n, I)
            else:
                yield (n, 1), self.evaluator(n)


CLOSED_FORMS = {
    form.name: form for form in (
        ClosedForm("ballot", ballot, "abc", PROVED, 2),
        ClosedForm("g", g, "abc-one", PROVED, 2),
        ClosedForm("a1_abc", a1_abc, "abc-one", PROVED, 1, first_n=1),
        ClosedForm("a2_abc", a2_abc, "abc-two", CONJECTURE, 1, first_n=1),
        ClosedForm("a1_cab", a1_cab, "cab-one", CONJECTURE, 1, first_n=1),
    )
}


@dataclass
class VerificationReport:
    form: str
    family: str
    n_max: int
    status: str
    checked: int = 0
    mismatches: List[dict] = field(default_factory=list)

    @property
    def passed(self):
        return not self.mismatches

    def to_dict(self):
        return {"form": self.form, "family": self.family, "n_max": self.n_max, "status": self.status,
                "checked": self.checked, "mismatches": self.mismatches}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def verify(form, family=None, n_max=30):
    """Compare a closed form with its engine on every cell of its domain up to n_max."""
    if isinstance(form, str):
        try:
            form = CLOSED_FORMS[form]
        except KeyError:
            raise InvalidInputError(f"unknown closed form {form!r}; choose from {', '.join(CLOSED_FORMS)}") from None
    family = family or form.family
    grid = build_table(family, n_max)
    report = VerificationReport(form.name, family, n_max, form.status)
    for cell, expected in form.cells(n_max):
        report.checked += 1
        if grid.cells[cell] != expected:
            report.mismatches.append({"n": cell[0], "I": cell[1],
                                      "formula": str(expected), "engine": str(grid.cells[cell])})
    log.info("Verified %s against %s up to n=%d: %d cells, %d mismatches",
             form.name, family, n_max, report.checked, len(report.mismatches))
    return report
