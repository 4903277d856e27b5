"""Run-time settings: ceilings, defaults and the CLI run configuration."""
import os
from dataclasses import dataclass
from typing import Optional, Tuple

from permpat.errors import ConfigError

DEFAULT_BRUTE_CEILING = 10
ORACLE_N_MAX = 8
FUNCTIONAL_EQ_CEILING = 7
ABCD_FUNCTIONAL_EQ_CEILING = 6
DEFAULT_HOLDOUT = 4
DEFAULT_MAX_ORDER = 2
DEFAULT_MAX_DEGREE = 2
BLOCK_SIZE = 20000

BRUTE_CEILING_ENV = "PERMPAT_BRUTE_CEILING"
OUTPUT_FORMATS = ("plain", "csv", "json")


def brute_ceiling():
    """Largest n for which Sₙ is enumerated, honoring PERMPAT_BRUTE_CEILING."""
    raw = os.environ.get(BRUTE_CEILING_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BRUTE_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{BRUTE_CEILING_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ConfigError(f"{BRUTE_CEILING_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: Optional[str] = None
    n_max: int = 10
    r: Tuple[int, ...] = (0,)
    thresholds: Tuple[int, ...] = (0,)
    output_format: str = "plain"
    brute_ceiling: Optional[int] = None
    holdout: int = DEFAULT_HOLDOUT
    max_order: int = DEFAULT_MAX_ORDER
    max_degree: int = DEFAULT_MAX_DEGREE

    def __post_init__(self):
        if self.n_max < 0:
            raise ConfigError(f"n_max must be >= 0, got {self.n_max}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {self.output_format!r}")
        if self.brute_ceiling is not None and self.brute_ceiling <= 0:
            raise ConfigError("brute-force ceiling must be positive")
        if self.holdout < 0:
            raise ConfigError("holdout must be >= 0")
        if self.max_order < 1 or self.max_degree < 0:
            raise ConfigError("max_order must be >= 1 and max_degree >= 0")

    def ceiling(self):
        return self.brute_ceiling if self.brute_ceiling is not None else brute_ceiling()
