"""Command-line front door: evaluate expressions, REPL, self-test.

Exit codes: 0 ok, 1 selftest failure, 2 parse error, 3 budget exhausted
(steps or digits), 4 domain error, 5 reference/primitive mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .budget import (
    Budget,
    BudgetExceeded,
    ConstructionLimit,
    DomainError,
    EvalStats,
    HyperError,
    MagnitudeExceeded,
    int_to_decimal,
)
from .notation import BOTH, FORMS, MismatchError, ParseError, evaluate, parse
from .selftest import FULL, QUICK, run_selftest

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_DOMAIN = 4
EXIT_MISMATCH = 5

_ERROR_EXIT_CODES = {
    BudgetExceeded: EXIT_BUDGET,
    MagnitudeExceeded: EXIT_BUDGET,
    DomainError: EXIT_DOMAIN,
    ConstructionLimit: EXIT_DOMAIN,
}


@dataclass(frozen=True)
class Config:
    form: str = BOTH
    max_steps: int = 10**7
    max_digits: int = 10**5
    quiet: bool = False

    def budget(self) -> Budget:
        return Budget(max_steps=self.max_steps, max_digits=self.max_digits)


def _stats_line(stats: EvalStats) -> str:
    return f"steps={stats.steps_used} peak_digits={stats.peak_digits}"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _print_error(prefix: str, message: str, stats: EvalStats | None = None) -> None:
    print(f"{prefix}: {message}", file=sys.stderr)
    if stats is not None:
        print(_stats_line(stats), file=sys.stderr)


def run_eval(expr_text: str, config: Config) -> int:
    try:
        expr = parse(expr_text)
    except ParseError as exc:
        _print_error(f"parse error (offset {exc.pos.offset})", str(exc))
        return EXIT_PARSE
    try:
        value, stats = evaluate(expr, config.form, config.budget())
    except MismatchError as exc:
        _print_error("mismatch", str(exc))
        return EXIT_MISMATCH
    except HyperError as exc:
        _print_error(exc.kind, str(exc), exc.stats)
        return _ERROR_EXIT_CODES.get(type(exc), EXIT_DOMAIN)
    print(int_to_decimal(value))
    if not config.quiet:
        print(_stats_line(stats))
    return EXIT_OK


def run_repl(config: Config) -> int:
    interactive = sys.stdin.isatty()
    if interactive:
        print("enter an expression per line, :quit to leave")
    while True:
        if interactive:
            print("hyperfold> ", end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            return EXIT_OK
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            return EXIT_OK
        if line.startswith(":"):
            print(f"unknown command {line!r} (only :quit)", file=sys.stderr)
            continue
        run_eval(line, config)


def run_selftest_cmd(level: str, config: Config) -> int:
    return run_selftest(level, config.budget())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperfold",
        description=(
            "evaluate Ackermann/up-arrow/chained-arrow expressions with both "
            "the rewrite equations and their fold forms"
        ),
    )
    parser.add_argument(
        "--form",
        choices=FORMS,
        default=BOTH,
        help="which evaluator family to run; 'both' compares them "
        "(stats are then the two runs combined)",
    )
    parser.add_argument(
        "--max-steps",
        type=_positive_int,
        default=10**7,
        metavar="N",
        help="step budget per evaluation (default 10^7)",
    )
    parser.add_argument(
        "--max-digits",
        type=_positive_int,
        default=10**5,
        metavar="N",
        help="decimal-digit cap on any intermediate value (default 10^5)",
    )
    parser.add_argument(
        "--quiet", action="store_true", help="suppress the stats line"
    )
    commands = parser.add_subparsers(dest="command", required=True)
    cmd_eval = commands.add_parser("eval", help="evaluate one expression")
    cmd_eval.add_argument("expression", help="e.g. '3->3->2', 'ack(3,3)', '2^^4'")
    commands.add_parser("repl", help="read one expression per line")
    cmd_self = commands.add_parser("selftest", help="run the built-in suites")
    cmd_self.add_argument(
        "level", nargs="?", choices=[QUICK, FULL], default=QUICK
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    config = Config(
        form=args.form,
        max_steps=args.max_steps,
        max_digits=args.max_digits,
        quiet=args.quiet,
    )
    if args.command == "eval":
        return run_eval(args.expression, config)
    if args.command == "repl":
        return run_repl(config)
    return run_selftest_cmd(args.level, config)


if __name__ == "__main__":
    sys.exit(main())
