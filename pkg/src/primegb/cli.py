"""``primegb`` command line.

Exit codes: 0 success (and consistent), 1 usage, parse or IO error,
2 pass limit exceeded, 3 success but inconsistent.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout
from itertools import combinations
from logging import getLogger
from typing import IO, Any, Callable, NoReturn, Optional, Sequence

from exceptiongroup import ExceptionGroup

from . import __version__
from .buchberger import BasisReport, BuchbergerConfig, Profile, buchberger, reduce_basis
from .division import multivariate_divide
from .errors import PassLimitExceeded, PrimeGBError, TooManyVariables
from .oracle import boolean_solutions, has_field_equations
from .ordering import MonomialOrder, OrderKind, leading_term
from .parser import SystemFile, load_system, render_term
from .spoly import ReductionMode, reduce_polynomial, s_polynomial

__all__ = [
    "EXIT_OK",
    "EXIT_ERROR",
    "EXIT_PASS_LIMIT",
    "EXIT_INCONSISTENT",
    "DEFAULT_MAX_PASSES",
    "build_parser",
    "run",
    "main",
]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PASS_LIMIT = 2
EXIT_INCONSISTENT = 3
DEFAULT_MAX_PASSES = 64

logger = getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "file", help="system file, 'vars: <n>' then one polynomial per line"
    )
    common.add_argument(
        "--order",
        choices=[kind.value for kind in OrderKind],
        default=OrderKind.Prime.value,
        help="monomial order (default: %(default)s)",
    )
    common.add_argument("--json", action="store_true", help="print a JSON document")
    common.add_argument(
        "--trace", action="store_true", help="log every pass to standard error"
    )

    run_options = _ArgumentParser(add_help=False)
    run_options.add_argument(
        "--profile",
        choices=[profile.value for profile in Profile],
        default=Profile.Conservative.value,
        help="algorithm profile (default: %(default)s)",
    )
    run_options.add_argument(
        "--max-passes",
        type=int,
        default=DEFAULT_MAX_PASSES,
        help="give up after this many passes (default: %(default)s)",
    )
    run_options.add_argument(
        "--progress", action="store_true", help="show a progress bar per pass"
    )

    parser = _ArgumentParser(
        prog="primegb", description="Gröbner bases under the prime-encoding order."
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    gb = subparsers.add_parser(
        "gb", parents=[common, run_options], help="compute a Gröbner basis"
    )
    gb.add_argument(
        "--reduced",
        action="store_true",
        help="print the reduced basis (conservative profile only)",
    )
    gb.set_defaults(handler=_gb)

    solvable = subparsers.add_parser(
        "solvable", parents=[common, run_options], help="decide solvability"
    )
    solvable.add_argument(
        "--check",
        action="store_true",
        help="cross-check with Boolean brute force if x_i^2 - x_i are all present",
    )
    solvable.set_defaults(handler=_solvable)

    subparsers.add_parser(
        "divide", parents=[common], help="divide the first polynomial by the rest"
    ).set_defaults(handler=_divide)
    subparsers.add_parser(
        "spoly", parents=[common], help="print every pairwise S-polynomial"
    ).set_defaults(handler=_spoly)
    subparsers.add_parser(
        "leading-term", parents=[common], help="print each leading term"
    ).set_defaults(handler=_leading_term)

    reduce = subparsers.add_parser(
        "reduce", parents=[common], help="apply monomial-content reduction"
    )
    reduce.add_argument(
        "--mode",
        choices=[mode.value for mode in ReductionMode],
        default=ReductionMode.Content.value,
        help="reduction mode (default: %(default)s)",
    )
    reduce.set_defaults(handler=_reduce)
    return parser


def _emit(args: argparse.Namespace, lines: Sequence[str], document: Any) -> None:
    if args.json:
        print(json.dumps(document, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def _run_buchberger(args: argparse.Namespace, system: SystemFile) -> BasisReport:
    config = BuchbergerConfig.from_profile(
        args.profile,
        order=MonomialOrder.from_name(args.order),
        max_passes=args.max_passes,
        use_tqdm=args.progress,
    )
    report = buchberger(system.polynomials, config)
    if args.trace:
        print(report.history.to_string(), file=sys.stderr)
    return report


def _exit_code(report: BasisReport) -> int:
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


def _gb(args: argparse.Namespace, system: SystemFile) -> int:
    report = _run_buchberger(args, system)
    basis = list(report.basis)
    if args.reduced:
        basis = reduce_basis(basis, report.order) if basis else []
    document = report.to_dict()
    document["basis"] = [str(g) for g in basis]
    _emit(args, document["basis"], document)
    return _exit_code(report)


def _solvable(args: argparse.Namespace, system: SystemFile) -> int:
    report = _run_buchberger(args, system)
    lines = [report.verdict.value]
    document = report.to_dict()
    if args.check:
        skipped: Optional[str] = None
        if not has_field_equations(system.polynomials, system.ctx):
            skipped = "field equations missing"
        else:
            try:
                solutions = boolean_solutions(system.polynomials, system.ctx)
            except TooManyVariables as e:
                logger.info("oracle skipped: %s", e)
                skipped = "too many variables"
        if skipped is None:
            agrees = bool(solutions) == report.consistent
            if not agrees:
                logger.warning(
                    "verdict %s but %d Boolean solutions",
                    report.verdict.value,
                    len(solutions),
                )
            lines.append(
                f"oracle: {len(solutions)} Boolean solutions, "
                + ("agrees" if agrees else "disagrees")
            )
            document["oracle"] = {
                "solutions": [list(point) for point in solutions],
                "agrees": agrees,
            }
        else:
            lines.append(f"oracle: skipped, {skipped}")
            document["oracle"] = None
    _emit(args, lines, document)
    return _exit_code(report)


def _divide(args: argparse.Namespace, system: SystemFile) -> int:
    if len(system.polynomials) < 2:
        raise ValueError("divide needs a dividend and at least one divisor")
    f, *divisors = system.polynomials
    result = multivariate_divide(f, divisors, MonomialOrder.from_name(args.order))
    quotients = [str(q) for q in result.quotients]
    remainder = str(result.remainder)
    lines = [f"q{i}: {q}" for i, q in enumerate(quotients)] + [f"r: {remainder}"]
    _emit(args, lines, {"quotients": quotients, "remainder": remainder})
    return EXIT_OK


def _spoly(args: argparse.Namespace, system: SystemFile) -> int:
    order = MonomialOrder.from_name(args.order)
    pairs = [
        (i, j, str(s_polynomial(f, g, order)))
        for (i, f), (j, g) in combinations(enumerate(system.polynomials), 2)
    ]
    _emit(
        args,
        [s for _, _, s in pairs],
        [{"pair": [i, j], "s_polynomial": s} for i, j, s in pairs],
    )
    return EXIT_OK


def _leading_term(args: argparse.Namespace, system: SystemFile) -> int:
    order = MonomialOrder.from_name(args.order)
    terms = [render_term(leading_term(f, order)) for f in system.polynomials]
    _emit(args, terms, terms)
    return EXIT_OK


def _reduce(args: argparse.Namespace, system: SystemFile) -> int:
    mode = ReductionMode(args.mode)
    reduced = [str(reduce_polynomial(f, mode)) for f in system.polynomials]
    _emit(args, reduced, reduced)
    return EXIT_OK


def _report_error(e: BaseException) -> None:
    if isinstance(e, ExceptionGroup):
        print(f"error: {e.message}", file=sys.stderr)
        for member in e.exceptions:
            line = getattr(member, "line", None)
            prefix = f"line {line}: " if line is not None else ""
            print(f"  {prefix}{member}", file=sys.stderr)
    else:
        print(f"error: {e}", file=sys.stderr)


def _dispatch(argv: Optional[Sequence[str]]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR
    if getattr(args, "reduced", False) and args.profile != Profile.Conservative.value:
        _report_error(ValueError("--reduced needs the conservative profile"))
        return EXIT_ERROR

    handler: Optional[logging.Handler] = None
    package_logger = getLogger("primegb")
    previous_level = package_logger.level
    if args.trace:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        package_logger.addHandler(handler)
        package_logger.setLevel(logging.DEBUG)
    command: Callable[[argparse.Namespace, SystemFile], int] = args.handler
    try:
        return command(args, load_system(args.file))
    except PassLimitExceeded as e:
        _report_error(e)
        return EXIT_PASS_LIMIT
    except (OSError, PrimeGBError, ValueError, ExceptionGroup) as e:
        _report_error(e)
        return EXIT_ERROR
    finally:
        if handler is not None:
            package_logger.removeHandler(handler)
            package_logger.setLevel(previous_level)


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
) -> int:
    """Run the command line on ``argv`` and return the exit code.

    ``stdout`` and ``stderr`` default to the process streams.
    """
    with redirect_stdout(stdout or sys.stdout), redirect_stderr(stderr or sys.stderr):
        return _dispatch(argv)


def main() -> NoReturn:
    sys.exit(run())
