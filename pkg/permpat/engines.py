"""Memoized recurrence engines for every table family.

Rows are built in increasing n and, inside a row, in decreasing I, since each
recurrence looks at (n, I+1) and at row n-1.  Every family stores the I = 0
column as a copy of I = 1, and S_0 has a single (empty) permutation.

    abc       P(n,I)    no abc, no aj for j <= I
    abc-one   P1(n,I)   exactly one abc, no aj for j <= I
    abc-two   P2(n,I)   exactly two abc, no aj for j <= I
    cab       same recurrence as abc, counting cab avoiders
    cab-one   exactly one cab, no aj for j <= I
    abcd      P(n,I1,I2) no abcd, no abj for j <= I1, no aj for j <= I2
    abc+bac   no abc and no bac, no aj and no ja for j <= I
"""
import logging
import threading
import time
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Dict, Tuple

from permpat.errors import DomainError, InvalidInputError
from permpat.perm_core import PatternFamily

log = logging.getLogger(__name__)


class _RowMemo:
    """Grows a list of rows on demand; row n is computed from rows 0..n-1."""

    def __init__(self, name, step):
        self.name = name
        self._step = step
        self._rows = []
        self._lock = threading.RLock()

    def rows(self, n_max):
        with self._lock:
            if len(self._rows) <= n_max:
                started = time.time()
                while len(self._rows) <= n_max:
                    self._rows.append(self._step(len(self._rows), self._rows))
                log.debug("Extended %s rows to n=%d in %.3f seconds", self.name, n_max, time.time() - started)
            return self._rows


def _ballot_row(n, rows):
    row = [0] * (n + 1)
    row[n] = 1
    for I in range(n - 1, 0, -1):
        row[I] = row[I + 1] + rows[n - 1][I - 1]
    if n >= 1:
        row[0] = row[1]
    return row


def _abc_one_row(n, rows):
    P = _ABC.rows(n)
    row = [0] * (n + 1)
    if n >= 2:
        row[n - 2] = n - 2
    for I in range(n - 3, 0, -1):
        row[I] = row[I + 1] + rows[n - 1][I - 1] + P[n - I][2]
    if n >= 1:
        row[0] = row[1]
    return row


def _abc_two_row(n, rows):
    row = [0] * (n + 1)
    if n <= 3:
        return row
    P = _ABC.rows(n)
    P1 = _ABC_ONE.rows(n)
    row[n - 2] = n - 3
    for I in range(n - 3, 0, -1):
        row[I] = (rows[n - 1][I - 1] + row[I + 1] + P1[n - I][2] + P[n - I - 1][2]
                  + I * P[n - I][3] + (P[n - I + 1][3] if I > 1 else 0))
    row[0] = row[1]
    return row


def _cab_one_row(n, rows):
    P = _CAB.rows(n)
    row = [0] * (n + 1)
    if n >= 2:
        row[n - 2] = n - 2
    for I in range(n - 3, 0, -1):
        row[I] = row[I + 1] + rows[n - 1][I - 1] + P[n - 2][I]
    if n >= 1:
        row[0] = row[1]
    return row


def _abc_bac_row(n, rows):
    if n == 0:
        return [1]
    # no value j >= 2 can avoid both aj and ja, so only I <= 1 is nonzero
    row = [0] * (n + 1)
    row[1] = 1 if n == 1 else sum(rows[n - 1][i - 1] for i in range(1, n + 1))
    row[0] = row[1]
    return row


def _abcd_layer(n, layers):
    """Layer n as an (n+1) x (n+1) list indexed [I1][I2], conventions filled in."""
    if n == 0:
        return [[1]]
    prev = layers[n - 1]
    row_prefix = [[0] + list(accumulate(r)) for r in prev]
    col_suffix = [[0] * n for _ in range(n + 1)]
    for s in range(n - 1, -1, -1):
        for b in range(n):
            col_suffix[s][b] = col_suffix[s + 1][b] + prev[s][b]
    layer = [[0] * (n + 1) for _ in range(n + 1)]
    for I1 in range(1, n + 1):
        for I2 in range(1, I1 + 1):
            if I1 == I2 == n:
                layer[I1][I2] = 1
                continue
            last_at_i2_side = row_prefix[I1 - 1][I1] - row_prefix[I1 - 1][I2]
            last_above_i1 = col_suffix[I1][I2]
            layer[I1][I2] = last_at_i2_side + last_above_i1 + prev[I1 - 1][I2 - 1]
    for I1 in range(1, n + 1):
        for I2 in range(I1 + 1, n + 1):
            layer[I1][I2] = layer[I2][I2]
    for I2 in range(1, n + 1):
        layer[0][I2] = layer[1][I2]
    for I1 in range(n + 1):
        layer[I1][0] = layer[I1][1]
    return layer


_ABC = _RowMemo("abc", _ballot_row)
_ABC_ONE = _RowMemo("abc-one", _abc_one_row)
_ABC_TWO = _RowMemo("abc-two", _abc_two_row)
_CAB = _RowMemo("cab", _ballot_row)
_CAB_ONE = _RowMemo("cab-one", _cab_one_row)
_ABCD = _RowMemo("abcd", _abcd_layer)
_ABC_BAC = _RowMemo("abc+bac", _abc_bac_row)


def _check_domain(n, *I):
    for value in (n, *I):
        if not isinstance(value, int) or isinstance(value, bool):
            raise DomainError(f"indices must be integers, got {value!r}")
    if n < 0 or any(i < 0 or i > n for i in I):
        raise DomainError(f"need 0 <= I <= n, got n={n}, I={I}")


def abc_P(n, I):
    _check_domain(n, I)
    return _ABC.rows(n)[n][I]


def abc_P1(n, I):
    _check_domain(n, I)
    return _ABC_ONE.rows(n)[n][I]


def abc_P2(n, I):
    _check_domain(n, I)
    return _ABC_TWO.rows(n)[n][I]


def cab_P(n, I):
    _check_domain(n, I)
    return _CAB.rows(n)[n][I]


def cab_P1(n, I):
    _check_domain(n, I)
    return _CAB_ONE.rows(n)[n][I]


def abcd_P(n, I1, I2):
    _check_domain(n, I1, I2)
    return _ABCD.rows(n)[n][I1][I2]


def abc_bac_P(n):
    """Permutations of length n avoiding both abc and bac (2^(n-1))."""
    if not isinstance(n, int) or n <= 0:
        raise DomainError(f"n must be >= 1, got {n!r}")
    return _ABC_BAC.rows(n)[n][1]


@dataclass(frozen=True)
class EngineFamily:
    tag: str
    arity: int
    pattern_family: PatternFamily
    occurrences: Tuple[int, ...]
    provenance: str


FAMILIES = {
    f.tag: f for f in (
        EngineFamily("abc", 2, PatternFamily.ABC, (0,),
                     "P(n,I) = P(n,I+1) + P(n-1,I-1), P(n,n) = 1"),
        EngineFamily("abc-one", 2, PatternFamily.ABC, (1,),
                     "P1(n,I) = P1(n,I+1) + P1(n-1,I-1) + P(n-I,2), P1(n,n-2) = n-2"),
        EngineFamily("abc-two", 2, PatternFamily.ABC, (2,),
                     "P2(n,I) = P2(n-1,I-1) + P2(n,I+1) + P1(n-I,2) + P(n-I-1,2) + I*P(n-I,3)"
                     " + [I>1]*P(n-I+1,3), P2(n,n-2) = n-3"),
        EngineFamily("cab", 2, PatternFamily.CAB, (0,),
                     "P(n,I) = P(n,I+1) + P(n-1,I-1), P(n,n) = 1"),
        EngineFamily("cab-one", 2, PatternFamily.CAB, (1,),
                     "P1(n,I) = P1(n,I+1) + P1(n-1,I-1) + P(n-2,I), P1(n,n-2) = n-2"),
        EngineFamily("abcd", 3, PatternFamily.ABCD, (0,),
                     "P(n,I1,I2) = sum over the deleted last entry, prefix sums on layer n-1"),
        EngineFamily("abcd-I1", 2, PatternFamily.ABCD, (0,), "abcd cells P(n,I,1)"),
        EngineFamily("abcd-I2", 2, PatternFamily.ABCD, (0,), "abcd cells P(n,1,I)"),
        EngineFamily("abc+bac", 2, PatternFamily.ABC_BAC, (0, 0),
                     "P(n,1) = sum_{i=1..n} P(n-1,i-1), P(n,I) = 0 for I > 1, P(1,1) = 1"),
    )
}

_ROW_LOOKUPS = {
    "abc": lambda n: _ABC.rows(n)[n],
    "abc-one": lambda n: _ABC_ONE.rows(n)[n],
    "abc-two": lambda n: _ABC_TWO.rows(n)[n],
    "cab": lambda n: _CAB.rows(n)[n],
    "cab-one": lambda n: _CAB_ONE.rows(n)[n],
    "abc+bac": lambda n: _ABC_BAC.rows(n)[n],
    "abcd-I1": lambda n: [layer_row[min(1, n)] for layer_row in _ABCD.rows(n)[n]],
    "abcd-I2": lambda n: _ABCD.rows(n)[n][min(1, n)],
}


def engine_family(tag):
    try:
        return FAMILIES[tag]
    except KeyError:
        raise InvalidInputError(f"unknown family {tag!r}; choose from {', '.join(FAMILIES)}") from None


@dataclass(frozen=True)
class TableGrid:
    family: str
    n_max: int
    cells: Dict[Tuple[int, ...], int] = field(repr=False)
    provenance: str = ""

    @property
    def arity(self):
        return len(next(iter(self.cells)))

    def value(self, n, *I):
        return self.cells[(n, *I)]

    def row(self, n):
        return [self.cells[(n, I)] for I in range(n + 1)]

    def sequence(self, *I):
        """(start_index, values) of a fixed column, using the I=0 convention at small n."""
        start = 0 if all(i <= 1 for i in I) else max(I)
        values = [self.cells[(n, *(min(i, n) for i in I))] for n in range(start, self.n_max + 1)]
        return start, values


def build_table(family, n_max):
    """Every cell 0 <= I (,I2) <= n <= n_max of a family."""
    entry = engine_family(family)
    if not isinstance(n_max, int) or n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max!r}")
    started = time.time()
    cells = {}
    if entry.arity == 3:
        layers = _ABCD.rows(n_max)
        for n in range(n_max + 1):
            for I1 in range(n + 1):
                for I2 in range(n + 1):
                    cells[(n, I1, I2)] = layers[n][I1][I2]
    else:
        lookup = _ROW_LOOKUPS[entry.tag]
        for n in range(n_max + 1):
            for I, value in enumerate(lookup(n)):
                cells[(n, I)] = value
    log.info("Built %s table up to n=%d in %.2f seconds", entry.tag, n_max, time.time() - started)
    return TableGrid(entry.tag, n_max, cells, entry.provenance)
