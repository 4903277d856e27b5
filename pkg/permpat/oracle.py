"""Engine tables compared cell by cell against brute-force enumeration."""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import List

from permpat import config
from permpat.engines import FAMILIES, build_table
from permpat.perm_core import brute_cells

log = logging.getLogger(__name__)

ORACLE_FAMILIES = ("abc", "abc-one", "abc-two", "cab", "cab-one", "abcd", "abc+bac")


@dataclass
class Mismatch:
    cell: List[int]
    engine: int
    brute: int


@dataclass
class OracleReport:
    family: str
    n_max: int
    checked: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)

    @property
    def passed(self):
        return not self.mismatches

    def to_dict(self):
        data = asdict(self)
        data["status"] = "pass" if self.passed else "fail"
        for m in data["mismatches"]:
            m["engine"], m["brute"] = str(m["engine"]), str(m["brute"])
        return data


def compare_family(family, n_max, ceiling=None):
    """Every engine cell with n <= n_max against brute_count."""
    entry = FAMILIES[family]
    limit = config.brute_ceiling() if ceiling is None else ceiling
    n_max = min(n_max, limit)
    started = time.time()
    grid = build_table(family, n_max)
    r = entry.occurrences if len(entry.occurrences) > 1 else entry.occurrences[0]
    report = OracleReport(family, n_max)
    for n in range(n_max + 1):
        brute = brute_cells(n, entry.pattern_family, r, ceiling=limit)
        for thresholds, expected in sorted(brute.items()):
            key = (n, *thresholds)
            report.checked += 1
            if grid.cells[key] != expected:
                log.debug("Mismatch for %s at %s: engine %d, brute %d", family, key, grid.cells[key], expected)
                report.mismatches.append(Mismatch(list(key), grid.cells[key], expected))
    log.info("Oracle check of %s up to n=%d: %d cells, %d mismatches, %.2f seconds",
             family, n_max, report.checked, len(report.mismatches), time.time() - started)
    return report


def run_oracle_suite(n_max=config.ORACLE_N_MAX, families=ORACLE_FAMILIES, workers=1, ceiling=None):
    """Reports in the order of families, whatever the number of workers."""
    if workers <= 1:
        return [compare_family(f, n_max, ceiling) for f in families]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(compare_family, families, [n_max] * len(families), [ceiling] * len(families)))
