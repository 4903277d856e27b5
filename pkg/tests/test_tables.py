import pytest

from permpat.engines import build_table
from permpat.errors import InvalidInputError
from permpat.tables import grid_from_json, grid_to_json, read_csv_table, to_csv, to_plain


def test_csv_matches_golden(fixtures_dir):
    expected = (fixtures_dir / "golden" / "table_abc_10.csv").read_text()
    assert to_csv(build_table("abc", 10)) == expected


def test_csv_single_row():
    assert to_csv(build_table("abc", 0)) == "n,I=0\n0,1\n"


def test_csv_file_reads_back(tmp_path):
    grid = build_table("cab-one", 9)
    path = tmp_path / "cab_one.csv"
    to_csv(grid, path)
    assert read_csv_table(path) == grid.cells


def test_plain_has_a_row_per_n():
    lines = to_plain(build_table("abc-two", 6)).splitlines()
    assert len(lines) == 8
    assert lines[0].split()[:3] == ["n", "I=0", "I=1"]
    assert lines[-1].split()[:5] == ["6", "133", "133", "74", "23"]


def test_three_index_family_has_no_ragged_view():
    with pytest.raises(InvalidInputError):
        to_csv(build_table("abcd", 4))


@pytest.mark.parametrize("family", ["abc", "abcd", "abc+bac"])
def test_json_round_trip(family):
    grid = build_table(family, 7)
    back = grid_from_json(grid_to_json(grid))
    assert back == grid
    assert back.provenance == grid.provenance


def test_json_values_are_strings():
    text = grid_to_json(build_table("abc", 25))
    assert '"value": "4861946401452"' in text


@pytest.mark.parametrize("text", ["{", "[]", '{"family": "abc"}', '{"family": "abc", "n_max": 1, "cells": [{"n": 0}]}'])
def test_bad_json(text):
    with pytest.raises(InvalidInputError):
        grid_from_json(text)
