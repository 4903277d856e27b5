"""Permutations, patterns, occurrence counts and the brute-force oracle.

Single permutations are handled with plain tuples.  Whole symmetric groups are
streamed through numpy in blocks of rows, one permutation per row, so that the
n = 10 sweeps stay within seconds.
"""
import logging
import time
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, islice, permutations
from typing import Dict, Optional, Tuple

import numpy as np
import pandas as pd

from permpat import config
from permpat.errors import InvalidInputError, ResourceLimitError
from permpat.exact_arith import binomial
from permpat.qpoly import QPolynomial

log = logging.getLogger(__name__)

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def reduce(word):
    """Order-isomorphic relabeling of distinct integers onto 1..r."""
    word = tuple(int(x) for x in word)
    if len(set(word)) != len(word):
        raise InvalidInputError(f"entries must be pairwise distinct: {word}")
    ranks = {v: i + 1 for i, v in enumerate(sorted(word))}
    return Pattern(tuple(ranks[v] for v in word))


def as_permutation(entries):
    entries = tuple(int(x) for x in entries)
    if sorted(entries) != list(range(1, len(entries) + 1)):
        raise InvalidInputError(f"not a permutation of 1..{len(entries)}: {entries}")
    return entries


def parse_permutation(text):
    """Read "2314" (single digits) or "2 3 1 4" / "2,3,1,4"."""
    text = text.strip()
    if any(sep in text for sep in " ,"):
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    try:
        return as_permutation(int(p) for p in parts)
    except ValueError:
        raise InvalidInputError(f"not a permutation: {text!r}") from None


@dataclass(frozen=True)
class Pattern:
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", as_permutation(self.entries))

    @classmethod
    def parse(cls, text):
        """Accept "cab" or "312"; letters are ranked alphabetically."""
        text = text.strip()
        if not text:
            raise InvalidInputError("a pattern needs at least one letter")
        if text.isdigit():
            return reduce(int(c) for c in text)
        if text.isalpha() and text.islower():
            return reduce(LETTERS.index(c) for c in text)
        raise InvalidInputError(f"pattern must be letters or digits: {text!r}")

    def __len__(self):
        return len(self.entries)

    @property
    def letters(self):
        return "".join(LETTERS[v - 1] for v in self.entries)

    def is_increasing(self):
        return self.entries == tuple(range(1, len(self) + 1))

    def is_decreasing(self):
        return self.entries == tuple(range(len(self), 0, -1))

    def reverse_complement(self):
        r = len(self)
        return Pattern(tuple(r + 1 - v for v in reversed(self.entries)))

    def __str__(self):
        return self.letters


ABC = Pattern((1, 2, 3))
BAC = Pattern((2, 1, 3))
CAB = Pattern((3, 1, 2))
ABCD = Pattern((1, 2, 3, 4))


class PatternFamily(str, Enum):
    """Weight systems: main pattern(s) plus the auxiliary letter statistics."""

    ABC = "abc"
    CAB = "cab"
    ABCD = "abcd"
    ABC_BAC = "abc+bac"

    @property
    def patterns(self):
        return {
            PatternFamily.ABC: (ABC,),
            PatternFamily.CAB: (CAB,),
            PatternFamily.ABCD: (ABCD,),
            PatternFamily.ABC_BAC: (ABC, BAC),
        }[self]

    @property
    def threshold_arity(self):
        return 2 if self is PatternFamily.ABCD else 1


# Single permutations


def count_pattern_naive(sigma, pi):
    """Count by checking every index subset; reference for the faster paths."""
    target = pi.entries
    return sum(1 for idx in combinations(range(len(sigma)), len(target))
               if reduce(sigma[i] for i in idx).entries == target)


def _monotone_count(sigma, r, increasing):
    # ends[k]: occurrences of the length-m prefix pattern ending at position k
    n = len(sigma)
    ends = [1] * n
    for _ in range(r - 1):
        ends = [sum(ends[p] for p in range(k)
                    if (sigma[p] < sigma[k]) == increasing)
                for k in range(n)]
    return sum(ends)


def _suffix_below(sigma):
    """below[p][v]: entries at positions >= p with value < v."""
    n = len(sigma)
    below = [[0] * (n + 2) for _ in range(n + 1)]
    for p in range(n - 1, -1, -1):
        below[p] = [c + (sigma[p] < v) for v, c in enumerate(below[p + 1])]
    return below


def _window(values, pi, n):
    """Open value interval allowed for letter len(values) of pi, given the values placed so far."""
    rank = pi.entries[len(values)]
    lo = max((v for v, e in zip(values, pi.entries) if e < rank), default=0)
    hi = min((v for v, e in zip(values, pi.entries) if e > rank), default=n + 1)
    return lo, hi


def _prefix_count(sigma, pi, below, values, start):
    # occurrences of pi extending the placed prefix, next letter at a position >= start
    n = len(sigma)
    lo, hi = _window(values, pi, n)
    if len(values) == len(pi) - 1:
        return below[start][hi] - below[start][lo + 1] if lo < hi else 0
    return sum(_prefix_count(sigma, pi, below, values + (sigma[k],), k + 1)
               for k in range(start, n) if lo < sigma[k] < hi)


def count_pattern(sigma, pi):
    if len(pi) > len(sigma):
        return 0
    if pi.is_increasing():
        return _monotone_count(sigma, len(pi), True)
    if pi.is_decreasing():
        return _monotone_count(sigma, len(pi), False)
    return _prefix_count(sigma, pi, _suffix_below(sigma), (), 0)


@dataclass
class OccurrenceProfile:
    phi_main: int
    phi_aj: Dict[int, int]
    phi_abj: Optional[Dict[int, int]] = None
    phi_ja: Optional[Dict[int, int]] = None
    secondary_main: Optional[int] = None


def _letter_statistics(sigma):
    n = len(sigma)
    smaller_before = [sum(1 for p in range(k) if sigma[p] < sigma[k]) for k in range(n)]
    abj_at = [sum(smaller_before[p] for p in range(k) if sigma[p] < sigma[k]) for k in range(n)]
    return smaller_before, abj_at


def occurrence_profile(sigma, family):
    """All exponents of the weight monomial of sigma in the given family."""
    family = PatternFamily(family)
    sigma = as_permutation(sigma)
    smaller_before, abj_at = _letter_statistics(sigma)
    aj = {sigma[k]: smaller_before[k] for k in range(len(sigma)) if sigma[k] >= 2}
    if family is PatternFamily.ABC:
        return OccurrenceProfile(phi_main=sum(abj_at), phi_aj=aj)
    if family is PatternFamily.CAB:
        return OccurrenceProfile(phi_main=count_pattern(sigma, CAB), phi_aj=aj)
    if family is PatternFamily.ABCD:
        abj = {sigma[k]: abj_at[k] for k in range(len(sigma)) if sigma[k] >= 3}
        return OccurrenceProfile(phi_main=count_pattern(sigma, ABCD), phi_aj=aj, phi_abj=abj)
    ja = {j: (j - 1) - count for j, count in aj.items()}
    return OccurrenceProfile(phi_main=sum(abj_at), phi_aj=aj, phi_ja=ja,
                             secondary_main=count_pattern(sigma, BAC))


def _merge_count(seq):
    if len(seq) <= 1:
        return list(seq), 0
    mid = len(seq) // 2
    left, a = _merge_count(seq[:mid])
    right, b = _merge_count(seq[mid:])
    merged, count, i, j = [], a + b, 0, 0
    while i < len(left) and j < len(right):
        if left[i] < right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            count += len(left) - i
            j += 1
    return merged + left[i:] + right[j:], count


def inversions(sigma):
    """Pairs i < j with sigma[i] > sigma[j], by merge sort in O(n log n)."""
    return _merge_count(list(sigma))[1]


# Whole symmetric groups


def check_ceiling(n, ceiling=None):
    limit = config.brute_ceiling() if ceiling is None else ceiling
    if n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n}")
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds the brute-force ceiling {limit}")


def iter_permutations(n):
    return permutations(range(1, n + 1))


def permutation_blocks(n, block_size=config.BLOCK_SIZE):
    perms = iter_permutations(n)
    while True:
        chunk = list(islice(perms, block_size))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64).reshape(len(chunk), n)


def _smaller_before_block(block):
    out = np.zeros(block.shape, dtype=np.int64)
    for k in range(1, block.shape[1]):
        out[:, k] = (block[:, :k] < block[:, k:k + 1]).sum(axis=1)
    return out


def _chain_block(block, counts):
    """Extend per-position occurrence counts by one larger letter on the right."""
    out = np.zeros(block.shape, dtype=np.int64)
    for k in range(1, block.shape[1]):
        less = block[:, :k] < block[:, k:k + 1]
        out[:, k] = (less * counts[:, :k]).sum(axis=1)
    return out


def _by_value(block, per_position):
    b, n = block.shape
    out = np.zeros((b, n + 1), dtype=np.int64)
    out[np.arange(b)[:, None], block] = per_position
    return out


def _monotone_block(block, r, increasing):
    ends = np.ones(block.shape, dtype=np.int64)
    for _ in range(r - 1):
        nxt = np.zeros(block.shape, dtype=np.int64)
        for k in range(1, block.shape[1]):
            rel = block[:, :k] < block[:, k:k + 1] if increasing else block[:, :k] > block[:, k:k + 1]
            nxt[:, k] = (rel * ends[:, :k]).sum(axis=1)
        ends = nxt
    return ends.sum(axis=1)


def _suffix_below_block(block):
    b, n = block.shape
    values = np.arange(n + 2)
    below = np.zeros((b, n + 1, n + 2), dtype=np.int64)
    for p in range(n - 1, -1, -1):
        below[:, p, :] = below[:, p + 1, :] + (block[:, p:p + 1] < values[None, :])
    return below


def count_pattern_block(block, pi):
    """Occurrences of pi in every row of a permutation block."""
    if pi.is_increasing():
        return _monotone_block(block, len(pi), True)
    if pi.is_decreasing():
        return _monotone_block(block, len(pi), False)
    b, n = block.shape
    r = len(pi)
    total = np.zeros(b, dtype=np.int64)
    if r > n:
        return total
    below = _suffix_below_block(block)
    rows = np.arange(b)
    head = pi.entries[:-1]
    last = pi.entries[-1]
    low = [a for a, e in enumerate(head) if e < last]
    high = [a for a, e in enumerate(head) if e > last]
    pairs = [(a, c, head[a] < head[c]) for a, c in combinations(range(r - 1), 2)]
    # place all letters but the last, then count the last one from the suffix table
    for idx in combinations(range(n - 1), r - 1):
        cols = block[:, list(idx)]
        mask = np.ones(b, dtype=bool)
        for a, c, ascending in pairs:
            mask &= (cols[:, a] < cols[:, c]) == ascending
        lo = cols[:, low].max(axis=1) if low else np.zeros(b, dtype=np.int64)
        hi = cols[:, high].min(axis=1) if high else np.full(b, n + 1, dtype=np.int64)
        start = idx[-1] + 1
        inside = below[rows, start, hi] - below[rows, start, np.minimum(lo + 1, hi)]
        total += np.where(mask, inside, 0)
    return total


def _clear_upto(by_value, start):
    """Largest t with no nonzero count at any value start..t (n if none)."""
    rows, width = by_value.shape
    n = width - 1
    if start > n:
        return np.full(rows, n, dtype=np.int64)
    hits = by_value[:, start:] > 0
    first = np.where(hits.any(axis=1), hits.argmax(axis=1) + start, n + 1)
    return first - 1


def _block_keys(block, family):
    """Columns (main counts..., thresholds...) for each row of the block."""
    smaller = _smaller_before_block(block)
    aj = _by_value(block, smaller)
    if family is PatternFamily.ABC:
        return [_chain_block(block, smaller).sum(axis=1), _clear_upto(aj, 2)]
    if family is PatternFamily.CAB:
        return [count_pattern_block(block, CAB), _clear_upto(aj, 2)]
    if family is PatternFamily.ABCD:
        abj_at = _chain_block(block, smaller)
        abcd = _chain_block(block, abj_at).sum(axis=1)
        return [abcd, _clear_upto(_by_value(block, abj_at), 3), _clear_upto(aj, 2)]
    values = np.arange(block.shape[1] + 1)
    ja = np.maximum(values - 1, 0)[None, :] - aj
    return [_chain_block(block, smaller).sum(axis=1), count_pattern_block(block, BAC),
            _clear_upto(aj + ja, 2)]


@lru_cache(maxsize=None)
def _occurrence_histogram(n, family):
    started = time.time()
    mains = len(family.patterns)
    histogram = Counter()
    for block in permutation_blocks(n):
        keys = np.column_stack(_block_keys(block, family))
        rows, counts = np.unique(keys, axis=0, return_counts=True)
        for row, count in zip(rows, counts):
            row = tuple(int(x) for x in row)
            histogram[(row[:mains], row[mains:])] += int(count)
    log.info("Brute-force sweep of S_%d for %s in %.2f seconds", n, family.value, time.time() - started)
    return dict(histogram)


def _as_key(value, size, what):
    key = tuple(value) if isinstance(value, (tuple, list)) else (value,)
    if len(key) != size:
        raise InvalidInputError(f"{what} needs {size} value(s), got {key}")
    return tuple(int(x) for x in key)


def brute_count(n, family, r=0, I=0, ceiling=None):
    """Permutations of length n with main count(s) r and no auxiliary pattern up to I."""
    family = PatternFamily(family)
    check_ceiling(n, ceiling)
    r_key = _as_key(r, len(family.patterns), "occurrence count")
    i_key = _as_key(I, family.threshold_arity, "threshold")
    return sum(count for (main, clear), count in _occurrence_histogram(n, family).items()
               if main == r_key and all(c >= i for c, i in zip(clear, i_key)))


def brute_cells(n, family, r=0, ceiling=None):
    """brute_count for every threshold in 0..n at once, keyed like engine cells."""
    family = PatternFamily(family)
    check_ceiling(n, ceiling)
    r_key = _as_key(r, len(family.patterns), "occurrence count")
    arity = family.threshold_arity
    shape = (n + 1,) * arity
    exact = np.zeros(shape, dtype=object)
    for (main, clear), count in _occurrence_histogram(n, family).items():
        if main == r_key:
            exact[clear] += count
    cumulative = exact
    for axis in range(arity):
        cumulative = np.flip(np.cumsum(np.flip(cumulative, axis), axis=axis), axis)
    return {idx: int(cumulative[idx]) for idx in np.ndindex(*shape)}


def gen_poly(n, pi, ceiling=None):
    """F_n^pi(q): coefficient of q^i counts permutations with i occurrences of pi."""
    if isinstance(pi, str):
        pi = Pattern.parse(pi)
    check_ceiling(n, ceiling)
    coeffs = [0]
    for block in permutation_blocks(n):
        counts = np.bincount(count_pattern_block(block, pi))
        if len(counts) > len(coeffs):
            coeffs.extend([0] * (len(counts) - len(coeffs)))
        for i, c in enumerate(counts):
            coeffs[i] += int(c)
    return QPolynomial.univariate(coeffs)


def expand_at_one(f):
    """b_i with f(q) = sum b_i (q-1)^i."""
    coeffs = f.coefficients("q") if isinstance(f, QPolynomial) else list(f)
    return [sum(c * binomial(k, i) for k, c in enumerate(coeffs)) for i in range(len(coeffs))]


def tabulate_at_one(pi, n_max, ceiling=None):
    """b_i(n) for n = 1..n_max as a frame, one row per n."""
    rows = []
    for n in range(1, n_max + 1):
        b = expand_at_one(gen_poly(n, pi, ceiling))
        rows.append({"n": n, **{f"b{i}": str(v) for i, v in enumerate(b)}})
    return pd.DataFrame(rows).fillna("")
