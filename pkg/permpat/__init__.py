"""Enumeration of permutations by pattern occurrences, with exact arithmetic."""
from permpat.closed_forms import a1_abc, a1_cab, a2_abc, a1234_recurrence_check, ballot, g, verify
from permpat.engines import abc_bac_P, abc_P, abc_P1, abc_P2, abcd_P, build_table, cab_P, cab_P1
from permpat.functional_equations import check_functional_equation
from permpat.guesser import PRecurrence, apply, equivalent, guess
from permpat.perm_core import (
    Pattern,
    PatternFamily,
    brute_count,
    count_pattern,
    expand_at_one,
    gen_poly,
    occurrence_profile,
    reduce,
)

__version__ = "0.1.0"
