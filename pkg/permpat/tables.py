"""Export and import of TableGrid values.

The CSV and plain views reproduce the ragged layout of the printed tables:
one row per n, one column per I, blank where I > n.  JSON always carries
every engine cell explicitly, values as decimal strings.
"""
import json
import logging

import pandas as pd

from permpat.engines import TableGrid
from permpat.errors import InvalidInputError

log = logging.getLogger(__name__)


def grid_frame(grid):
    """Long frame with one row per cell: n, I (or I1, I2), value."""
    index_names = ["I"] if grid.arity == 2 else ["I1", "I2"]
    records = [dict(zip(["n", *index_names], key), value=str(value))
               for key, value in sorted(grid.cells.items())]
    return pd.DataFrame.from_records(records, columns=["n", *index_names, "value"])


def ragged_frame(grid):
    if grid.arity != 2:
        raise InvalidInputError(f"{grid.family} has three indices; use JSON or a 2-index view")
    pivot = grid_frame(grid).pivot(index="n", columns="I", values="value")
    pivot = pivot.reindex(index=range(grid.n_max + 1), columns=range(grid.n_max + 1)).fillna("")
    pivot.columns = [f"I={I}" for I in pivot.columns]
    pivot.index.name = "n"
    return pivot.reset_index()


def to_csv(grid, path=None):
    frame = ragged_frame(grid)
    if path is None:
        return frame.to_csv(index=False, lineterminator="\n")
    frame.to_csv(path, index=False, lineterminator="\n")
    log.info("Saved %s table to %s", grid.family, path)
    return None


def to_plain(grid):
    return ragged_frame(grid).to_string(index=False)


def grid_to_json(grid):
    cells = []
    for key, value in sorted(grid.cells.items()):
        n, *I = key
        cells.append({"n": n, "I": I[0] if len(I) == 1 else I, "value": str(value)})
    document = {"family": grid.family, "n_max": grid.n_max, "provenance": grid.provenance, "cells": cells}
    return json.dumps(document, indent=2)


def grid_from_json(text):
    try:
        document = json.loads(text)
        cells = {}
        for cell in document["cells"]:
            I = cell["I"] if isinstance(cell["I"], list) else [cell["I"]]
            cells[(int(cell["n"]), *(int(i) for i in I))] = int(cell["value"])
        return TableGrid(document["family"], int(document["n_max"]), cells, document.get("provenance", ""))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise InvalidInputError(f"not a table document: {e}") from e


def read_csv_table(path):
    """Ragged CSV back to {(n, I): value}, skipping blank cells."""
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    cells = {}
    for _, row in frame.iterrows():
        n = int(row["n"])
        for column in frame.columns[1:]:
            if row[column] != "":
                cells[(n, int(column.split("=")[1]))] = int(row[column])
    return cells
