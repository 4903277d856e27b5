from fractions import Fraction

import pytest

from permpat.engines import build_table
from permpat.errors import (
    InsufficientTermsError,
    IntegralityError,
    InvalidInputError,
    SingularityError,
)
from permpat.guesser import PRecurrence, apply, equivalent, guess, required_terms

CATALAN = PRecurrence([[-2, -4], [2, 1]])
ABCD_AVOIDERS = "(n+4)^2*a(n+2) = (10n^2+42n+41)*a(n+1) - 9(n+1)^2*a(n)"


def test_catalan_from_abc_column():
    start, seq = build_table("abc", 20).sequence(1)
    report = guess(seq, start)
    assert equivalent(report.found, CATALAN)
    assert str(report.found) == "(n + 2)*a(n+1) - (4*n + 2)*a(n) = 0"
    assert report.validated_terms == 4


def test_abcd_avoiders_recurrence():
    start, seq = build_table("abcd", 24).sequence(1, 1)
    assert len(seq) == 25
    report = guess(seq, start)
    assert report.found == PRecurrence.parse(ABCD_AVOIDERS)
    assert (report.found.order, report.found.degree) == (2, 2)
    assert str(report.found) == (
        "(n^2 + 8*n + 16)*a(n+2) - (10*n^2 + 42*n + 41)*a(n+1) + (9*n^2 + 18*n + 9)*a(n) = 0")


def test_constant_sequence():
    report = guess([7] * 15)
    assert str(report.found) == "a(n+1) - a(n) = 0"


def test_nothing_found_within_bounds():
    seq = [1, 3, 2, 8, 5, 13, 4, 21, 9, 34, 7, 55, 6, 89, 10, 144, 11]
    report = guess(seq, max_order=1, max_degree=1)
    assert report.found is None
    assert report.searched == [(1, 0), (1, 1)]


def test_guess_recovers_generating_recurrence():
    central = PRecurrence([[-2, -4], [1, 1]])
    seq = apply(central, [1], 19)
    assert seq[:6] == [1, 2, 6, 20, 70, 252]
    assert equivalent(guess(seq).found, central)


def test_scaling_does_not_change_the_fit():
    start, seq = build_table("abc", 20).sequence(1)
    assert guess([5 * x for x in seq], start).found == guess(seq, start).found


def test_insufficient_terms():
    assert required_terms(2, 2, 4) == 15
    with pytest.raises(InsufficientTermsError) as info:
        guess([1] * 10)
    assert (info.value.required, info.value.given) == (15, 10)


def test_apply_examples():
    assert apply(CATALAN, [1], 5) == [1, 1, 2, 5, 14, 42]
    assert apply(PRecurrence([[-1], [1]]), [7], 2) == [7, 7, 7]
    assert apply(CATALAN, [1], 0) == [1]


def test_apply_errors():
    with pytest.raises(SingularityError):
        apply(PRecurrence([[-1], [0, 1]]), [1], 3)
    with pytest.raises(IntegralityError):
        apply(PRecurrence([[-1], [2]]), [1], 1)
    with pytest.raises(InvalidInputError):
        apply(CATALAN, [1, 1], 3)


def test_normal_form():
    assert equivalent(PRecurrence([[4], [-4]]), PRecurrence([[-1], [1]]))
    assert PRecurrence([[Fraction(-1, 2)], [Fraction(1, 3)]]) == PRecurrence([[-3], [2]])
    assert not equivalent(CATALAN, PRecurrence([[-2, -4], [1, 1]]))
    with pytest.raises(InvalidInputError):
        PRecurrence([[1], []])


def test_parse_forms():
    assert PRecurrence.parse("(n+2)*a(n+1) = (4n+2)*a(n)") == CATALAN
    assert PRecurrence.parse("a(n+1)/(4n+2) - a(n)/(n+2) = 0") == CATALAN
    assert PRecurrence.parse(str(CATALAN)) == CATALAN


@pytest.mark.parametrize("text", ["a(n-1) = a(n)", "b(n+1) = a(n)", "a(n+1) = 2*a(n+2)", "a(n+1) = 2*"])
def test_parse_rejects(text):
    with pytest.raises(InvalidInputError):
        PRecurrence.parse(text)


def test_json_round_trip():
    rec = PRecurrence.parse(ABCD_AVOIDERS)
    assert PRecurrence.from_json(rec.to_json()) == rec
    with pytest.raises(InvalidInputError):
        PRecurrence.from_json('{"order": 1}')


def test_report_dict():
    start, seq = build_table("abc", 20).sequence(1)
    document = guess(seq, start).to_dict()
    assert document["input_length"] == 21
    assert document["found"]["coeffs"] == [["-2", "-4"], ["2", "1"]]
    assert document["recurrence"] == str(CATALAN)
