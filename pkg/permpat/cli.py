"""Command line: tables, verification suites, guessing and brute force.

    python -m permpat.cli table --family abc --n-max 10 --format csv
    python -m permpat.cli verify --suite all --n-max 8
    python -m permpat.cli guess --family abcd --column I1=1,I2=1 --n-max 24
    python -m permpat.cli genpoly --pattern abc --n 4 [--at-one]
    python -m permpat.cli bruteforce --family abcd --n 7 --I 1,3

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
import argparse
import json
import logging
import sys

from permpat import config
from permpat.closed_forms import CLOSED_FORMS, a1234_recurrence_check, verify
from permpat.config import RunConfig
from permpat.engines import build_table, engine_family
from permpat.errors import InvalidInputError, PermpatError
from permpat.functional_equations import check_functional_equation, functional_equation_ceiling
from permpat.guesser import guess
from permpat.oracle import run_oracle_suite
from permpat.perm_core import Pattern, PatternFamily, brute_count, expand_at_one, gen_poly
from permpat.tables import grid_to_json, to_csv, to_plain

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

TABLE_FAMILIES = ("abc", "abc-one", "abc-two", "cab", "cab-one", "abcd-I1", "abcd-I2", "abc+bac")
SUITES = ("oracle", "closed-forms", "functional-eq", "all")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _column(text):
    """"I=1" or "I1=1,I2=1" to a tuple of thresholds."""
    try:
        return tuple(int(part.split("=")[1]) for part in text.split(","))
    except (IndexError, ValueError):
        raise argparse.ArgumentTypeError(f"expected I=k or I1=k,I2=m, got {text!r}") from None


def build_parser():
    parser = _Parser(prog="permpat", description="Permutation pattern enumeration with exact arithmetic.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress (-vv for detail)")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print an engine table")
    table.add_argument("--family", required=True, choices=TABLE_FAMILIES)
    table.add_argument("--n-max", type=int, default=10)
    table.add_argument("--format", dest="output_format", default="plain", choices=config.OUTPUT_FORMATS)
    table.add_argument("--output", help="write to this file instead of stdout")

    check = sub.add_parser("verify", help="run verification suites")
    check.add_argument("--suite", default="all", choices=SUITES)
    check.add_argument("--n-max", type=int, default=config.ORACLE_N_MAX)
    check.add_argument("--format", dest="output_format", default="plain", choices=config.OUTPUT_FORMATS)
    check.add_argument("--workers", type=int, default=1)

    fit = sub.add_parser("guess", help="fit a recurrence to a column or a file of integers")
    source = fit.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", choices=("abc", "abc-one", "abc-two", "cab", "cab-one", "abcd", "abc+bac"))
    source.add_argument("--file", help="decimal integers separated by whitespace or commas")
    fit.add_argument("--column", type=_column, default=(1,))
    fit.add_argument("--n-max", type=int, default=24)
    fit.add_argument("--start-index", type=int, default=0)
    fit.add_argument("--max-order", type=int, default=config.DEFAULT_MAX_ORDER)
    fit.add_argument("--max-degree", type=int, default=config.DEFAULT_MAX_DEGREE)
    fit.add_argument("--holdout", type=int, default=config.DEFAULT_HOLDOUT)
    fit.add_argument("--format", dest="output_format", default="plain", choices=config.OUTPUT_FORMATS)

    poly = sub.add_parser("genpoly", help="coefficients of F_n(q) for one pattern")
    poly.add_argument("--pattern", required=True)
    poly.add_argument("--n", type=int, required=True)
    poly.add_argument("--at-one", action="store_true", help="print the expansion around q=1")
    poly.add_argument("--ceiling", type=int)

    brute = sub.add_parser("bruteforce", help="count permutations directly")
    brute.add_argument("--family", required=True, choices=[f.value for f in PatternFamily])
    brute.add_argument("--n", type=int, required=True)
    brute.add_argument("--r", type=_int_list, default=None)
    brute.add_argument("--I", dest="thresholds", type=_int_list, default=None)
    brute.add_argument("--ceiling", type=int)
    return parser


def cmd_table(run, output=None):
    grid = build_table(run.family, run.n_max)
    if run.output_format == "csv":
        text = to_csv(grid).rstrip("\n")
    elif run.output_format == "json":
        text = grid_to_json(grid)
    else:
        text = to_plain(grid)
    if output:
        try:
            with open(output, "w", encoding="utf-8") as f:
                f.write(text + "\n")
        except OSError as e:
            print(f"Error: could not write {output}: {e}", file=sys.stderr)
            return EXIT_USAGE
        log.info("Saved %s table to %s", run.family, output)
    else:
        print(text)
    return EXIT_OK


def _suite_results(suite, n_max, workers):
    results = []
    if suite in ("oracle", "all"):
        for report in run_oracle_suite(min(n_max, config.brute_ceiling()), workers=workers):
            first = report.mismatches[0].cell if report.mismatches else None
            results.append({"suite": "oracle", "name": report.family, "passed": report.passed,
                            "checked": report.checked, "first_failure": first})
    if suite in ("closed-forms", "all"):
        for form in CLOSED_FORMS.values():
            report = verify(form, n_max=n_max)
            first = report.mismatches[0] if report.mismatches else None
            results.append({"suite": "closed-forms", "name": form.name, "status": report.status,
                            "passed": report.passed, "checked": report.checked, "first_failure": first})
        if n_max >= 2:
            results.append({"suite": "closed-forms", "name": "abcd-recurrence", "status": "conjecture",
                            "passed": a1234_recurrence_check(n_max), "checked": n_max - 1,
                            "first_failure": None})
    if suite in ("functional-eq", "all"):
        for family in PatternFamily:
            top = min(n_max, functional_equation_ceiling(family))
            failed = [n for n in range(1, top + 1) if not check_functional_equation(n, family)]
            results.append({"suite": "functional-eq", "name": family.value, "passed": not failed,
                            "checked": top, "first_failure": failed[0] if failed else None})
    return results


def cmd_verify(run, suite="all", workers=1):
    results = _suite_results(suite, run.n_max, workers)
    passed = all(r["passed"] for r in results)
    if run.output_format == "json":
        print(json.dumps({"n_max": run.n_max, "passed": passed, "results": results}, indent=2))
    else:
        for r in results:
            line = f"{'PASS' if r['passed'] else 'FAIL'} {r['suite']} {r['name']} ({r['checked']} checked)"
            if not r["passed"]:
                line += f" first failure: {r['first_failure']}"
            print(line)
    return EXIT_OK if passed else EXIT_FAILED


def _read_sequence(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except FileNotFoundError:
        raise InvalidInputError(f"file not found at {path}") from None
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise InvalidInputError(f"{path} must contain decimal integers") from None


def cmd_guess(run, path=None, column=(1,), start_index=0):
    if path:
        seq = _read_sequence(path)
    else:
        entry = engine_family(run.family)
        if len(column) != entry.arity - 1:
            raise InvalidInputError(f"{run.family} needs {entry.arity - 1} column index(es), got {column}")
        start_index, seq = build_table(run.family, run.n_max).sequence(*column)
    report = guess(seq, start_index, run.max_order, run.max_degree, run.holdout)
    if run.output_format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    elif report.found:
        print(report.found)
    else:
        print("no recurrence found within bounds")
    return EXIT_OK


def cmd_genpoly(run, at_one=False):
    coeffs = gen_poly(run.n_max, Pattern.parse(run.family), run.brute_ceiling).coefficients("q")
    print(" ".join(str(c) for c in (expand_at_one(coeffs) if at_one else coeffs)))
    return EXIT_OK


def cmd_bruteforce(run):
    family = PatternFamily(run.family)
    # a single value stands for every slot; other length mismatches are rejected by brute_count
    r = run.r * len(family.patterns) if len(run.r) == 1 else run.r
    thresholds = run.thresholds * family.threshold_arity if len(run.thresholds) == 1 else run.thresholds
    print(brute_count(run.n_max, family, r, thresholds, ceiling=run.brute_ceiling))
    return EXIT_OK


def _configure_logging(verbosity):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        if args.command == "table":
            run = RunConfig("table", args.family, args.n_max, output_format=args.output_format)
            return cmd_table(run, args.output)
        if args.command == "verify":
            run = RunConfig("verify", n_max=args.n_max, output_format=args.output_format)
            return cmd_verify(run, args.suite, args.workers)
        if args.command == "guess":
            run = RunConfig("guess", args.family, args.n_max, output_format=args.output_format,
                            holdout=args.holdout, max_order=args.max_order, max_degree=args.max_degree)
            return cmd_guess(run, args.file, args.column, args.start_index)
        if args.command == "genpoly":
            run = RunConfig("genpoly", args.pattern, args.n, brute_ceiling=args.ceiling)
            return cmd_genpoly(run, args.at_one)
        run = RunConfig("bruteforce", args.family, args.n, r=args.r or (0,),
                        thresholds=args.thresholds or (0,), brute_ceiling=args.ceiling)
        return cmd_bruteforce(run)
    except PermpatError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
