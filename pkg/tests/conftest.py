from pathlib import Path

import pandas as pd
import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def load_reference_table(name):
    """{(n, I): value} for every non-blank cell of a reference table."""
    frame = pd.read_csv(FIXTURES / "reference" / name, dtype=str, keep_default_na=False)
    cells = {}
    for _, row in frame.iterrows():
        for column in frame.columns[1:]:
            if row[column] != "":
                cells[(int(row["n"]), int(column.split("=")[1]))] = int(row[column])
    return cells


@pytest.fixture
def reference_table():
    return load_reference_table


@pytest.fixture
def fixtures_dir():
    return FIXTURES
