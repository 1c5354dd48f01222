# This file is a part of Gerty.
#
# Copyright (C) 2021 The Gerty developers
#
# Gerty is free software; you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 3 of the License, or (at
# your option) any later version.
#
# Gerty is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
# FITNESS FOR A PARTICULAR PURPOSE. See the GNU Lesser General Public
# License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""
The gerty command line.

    gerty check FILE...                         type check source files
    gerty eval FILE NAME                        print the normal form of a definition
    gerty translate --target=stlc|ssf FILE NAME translate a definition into a simpler calculus
    gerty bench --arities=3..8 --trials=10      time the grade-directed optimisation
    gerty selftest --suite=SUITE --cases=N      run a seeded metatheory suite

Diagnostics go to stderr, results to stdout. Exit status 0 means success, 1 a rejected program and 2 a usage,
configuration or solver problem. Any other error is logged with its traceback and also exits with 2.
"""
import argparse
import logging
import sys
from pathlib import Path

from gerty.conf import settings
from gerty.core.exceptions import (
    FuelExhausted,
    ForeignLiteral,
    ImproperlyConfigured,
    NotQuantitative,
    OutOfFragment,
    ParseError,
    SimulationMismatch,
    SolverError,
    TypeCheckError,
    UnboundVariable,
    UnresolvedMetaVar,
)

logger = settings.logger

EX_OK = 0
EX_REJECTED = 1
EX_USAGE = 2

REJECTED = (
    ParseError,
    TypeCheckError,
    ForeignLiteral,
    UnresolvedMetaVar,
    FuelExhausted,
    NotQuantitative,
    OutOfFragment,
    SimulationMismatch,
)


def arities(text):
    """'3..8' or '3,5,8'."""
    try:
        if ".." in text:
            low, high = text.split("..")
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid arities '{text}', expected a range like 3..8 or a list like 3,4")
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"invalid arities '{text}', arities start at 1")
    return values


def positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid count '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"invalid count '{text}', must be at least 1")
    return value


def build_parser():
    from gerty.embeddings import TARGETS
    from gerty.oracle.suites import SUITES

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semiring", help="grade semiring (default: settings.DEFAULT_SEMIRING)")
    common.add_argument("--equality", help="grade equality backend: normal or smt (default: settings.DEFAULT_EQUALITY)")
    common.add_argument("--smt-solver", help="path of the SMT solver executable for the smt backend")
    common.add_argument("--fuel", type=positive, help="normalisation step budget (default: settings.FUEL)")
    common.add_argument("--seed", type=int, help="seed for generated programs (default: settings.SEED)")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    checking = argparse.ArgumentParser(add_help=False)
    checking.add_argument(
        "--optimize", action="store_true", default=None, help="elide substitutions by 0-graded binders"
    )

    parser = argparse.ArgumentParser(prog="gerty", description="Graded modal dependent type theory")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[common, checking], help="type check source files")
    check.add_argument("files", nargs="+", metavar="FILE")
    check.set_defaults(handler=run_check)

    evaluate = commands.add_parser("eval", parents=[common, checking], help="print the normal form of a definition")
    evaluate.add_argument("file", metavar="FILE")
    evaluate.add_argument("name", metavar="NAME")
    evaluate.add_argument("--erase-grades", action="store_true", help="print without grade annotations")
    evaluate.set_defaults(handler=run_eval)

    translate = commands.add_parser("translate", parents=[common, checking], help="translate a definition")
    translate.add_argument("--target", choices=sorted(TARGETS), required=True)
    translate.add_argument(
        "--base", default="", help="comma separated names to postulate as base types in Type 0, e.g. A,B"
    )
    translate.add_argument("file", metavar="FILE")
    translate.add_argument("name", metavar="NAME")
    translate.set_defaults(handler=run_translate)

    bench = commands.add_parser("bench", parents=[common], help="time checking with and without elision")
    bench.add_argument("--arities", type=arities, default=list(settings.BENCH_ARITIES))
    bench.add_argument("--trials", type=positive, default=settings.BENCH_TRIALS)
    bench.add_argument("--backend", choices=sorted(settings.EQUALITY_BACKENDS), help="defaults to --equality")
    bench.add_argument("--csv", metavar="PATH", help="also write the rows as CSV ('-' for stdout)")
    bench.set_defaults(handler=run_bench)

    selftest = commands.add_parser("selftest", parents=[common], help="run seeded metatheory suites")
    selftest.add_argument("--suite", choices=SUITES, action="append", help="repeat for several (default: all)")
    selftest.add_argument("--cases", type=positive, default=100)
    selftest.set_defaults(handler=run_selftest)

    return parser


def load(path):
    from gerty.syntax.parser import parse_file

    return parse_file(Path(path).read_text(encoding="utf-8"), str(path))


def environment_options(args):
    options = {"backend": args.equality, "fuel": args.fuel}
    if getattr(args, "optimize", None) is not None:
        options["optimise"] = args.optimize
    return options


def run_check(args):
    from gerty.checker import check_declarations

    status = EX_OK
    for path in args.files:
        report = check_declarations(load(path), semiring=args.semiring, **environment_options(args))
        for result in report:
            if not result.ok:
                print(result.error, file=sys.stderr)
        if report.ok:
            print(f"{path}: {len(report)} declaration(s) checked")
        else:
            status = EX_REJECTED
    return status


def run_eval(args):
    from gerty.checker import check_declarations
    from gerty.evaluation.reduction import normal_form
    from gerty.syntax.pretty import pretty
    from gerty.syntax.terms import Var

    report = check_declarations(load(args.file), semiring=args.semiring, **environment_options(args))
    if not report.ok:
        for error in report.errors:
            print(error, file=sys.stderr)
        return EX_REJECTED
    env = report.environment
    if args.name not in env.definitions:
        raise UnboundVariable(f"No definition named '{args.name}'.")
    print(pretty(normal_form(Var(args.name), env.fuel, env.definitions), erase=args.erase_grades))
    return EX_OK


def run_translate(args):
    from gerty.embeddings import translate_declaration

    bases = [name.strip() for name in args.base.split(",") if name.strip()]
    translation = translate_declaration(
        load(args.file), args.name, args.target, semiring=args.semiring, bases=bases, **environment_options(args)
    )
    print(translation)
    return EX_OK


def run_bench(args):
    from gerty.bench import BenchConfig, format_table, run_bench as bench, write_csv

    config = BenchConfig(arities=args.arities, trials=args.trials, backend=args.backend or args.equality)
    rows = bench(config)
    print(format_table(rows))
    if args.csv == "-":
        write_csv(rows, sys.stdout)
    elif args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as stream:
            write_csv(rows, stream)
    return EX_OK if all(row.accepted for row in rows) else EX_REJECTED


def run_selftest(args):
    from gerty.oracle.suites import SUITES, run_suite

    status = EX_OK
    for suite in args.suite or SUITES:
        report = run_suite(suite, cases=args.cases, seed=args.seed, semiring=args.semiring)
        print(report)
        if not report.ok:
            status = EX_REJECTED
    return status


def main(argv=None):
    """
    :return: The exit status.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.LOGGING_LEVEL,
        format="%(asctime)s - %(threadName)s - %(module)s - %(levelname)s - %(message)s",
    )
    if args.verbose:
        settings.logger.setLevel(logging.DEBUG)
    if args.smt_solver:
        settings.SMT_SOLVER = args.smt_solver

    try:
        return args.handler(args)
    except REJECTED as e:
        print(e, file=sys.stderr)
        return EX_REJECTED
    except (ImproperlyConfigured, SolverError, OSError) as e:
        print(f"gerty: {e}", file=sys.stderr)
        return EX_USAGE
    except Exception as e:
        logger.exception(f"Unexpected error while running '{args.command}': {e}")
        print(f"gerty: internal error: {e!r}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
