"""Command-line recognizer for Stick graphs."""

import argparse
import logging
import sys

from colorama import init

from config import DEBUG, PARALLEL_JOBS
from cli.command_handlers import (
    handle_gen,
    handle_interrupt,
    handle_patterns,
    handle_recognize,
    handle_render,
    handle_solve_a,
    handle_solve_ab,
    handle_verify,
)
from decorators.input_error import CommandOutcome, input_error
from decorators.keyboard_interrupt_error import keyboard_interrupt_error
from utils.constants import (
    APP_DESCRIPTION,
    APP_NAME,
    APP_VERSION,
    EMIT_CERTIFICATE,
    EMIT_CYCLE,
    EMIT_DIMACS,
    EMIT_PATTERN,
    EMIT_SIGMA,
    FORMAT_ASCII,
    FORMAT_SVG,
    HELP_EMIT,
    HELP_GEN,
    HELP_GRAPH,
    HELP_JOBS,
    HELP_ORDER_A,
    HELP_ORDER_B,
    HELP_PATTERNS,
    HELP_RECOGNIZE,
    HELP_RENDER,
    HELP_SIGMA,
    HELP_SOLVE_A,
    HELP_SOLVE_AB,
    HELP_VERIFY,
    METHOD_AUTO,
    RECOGNIZE_METHODS,
    RENDER_FORMATS,
)
from utils.log_config import init_logging
from validators.errors import ValidationError


class _Parser(argparse.ArgumentParser):
    """Raises ValidationError instead of exiting, so usage errors exit with 3."""

    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=APP_NAME, description=APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument("--jobs", type=int, default=PARALLEL_JOBS, help=HELP_JOBS)
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve_ab = commands.add_parser("solve-ab", help=HELP_SOLVE_AB)
    solve_ab.add_argument("graph", help=HELP_GRAPH)
    solve_ab.add_argument("--order-a", required=True, help=HELP_ORDER_A)
    solve_ab.add_argument("--order-b", required=True, help=HELP_ORDER_B)
    solve_ab.add_argument(
        "--emit",
        choices=(EMIT_SIGMA, FORMAT_SVG, FORMAT_ASCII, EMIT_CYCLE, EMIT_PATTERN),
        default=EMIT_SIGMA,
        help=HELP_EMIT,
    )

    solve_a = commands.add_parser("solve-a", help=HELP_SOLVE_A)
    solve_a.add_argument("graph", help=HELP_GRAPH)
    solve_a.add_argument("--order-a", required=True, help=HELP_ORDER_A)
    solve_a.add_argument(
        "--emit", choices=(EMIT_SIGMA, FORMAT_SVG, EMIT_DIMACS), default=EMIT_SIGMA, help=HELP_EMIT
    )

    recognize = commands.add_parser("recognize", help=HELP_RECOGNIZE)
    recognize.add_argument("graph", help=HELP_GRAPH)
    recognize.add_argument("--method", choices=RECOGNIZE_METHODS, default=METHOD_AUTO)
    recognize.add_argument(
        "--emit",
        choices=(EMIT_SIGMA, FORMAT_SVG, EMIT_CERTIFICATE, EMIT_DIMACS),
        default=EMIT_SIGMA,
        help=HELP_EMIT,
    )

    patterns = commands.add_parser("patterns", help=HELP_PATTERNS)
    patterns.add_argument("graph", help=HELP_GRAPH)
    mode = patterns.add_mutually_exclusive_group(required=True)
    mode.add_argument("--ordered", action="store_true")
    mode.add_argument("--universal", action="store_true")
    mode.add_argument("--fixed-a-obstruction", action="store_true")
    mode.add_argument("--k44", action="store_true")
    patterns.add_argument("--order-a", help=HELP_ORDER_A)
    patterns.add_argument("--order-b", help=HELP_ORDER_B)

    verify = commands.add_parser("verify", help=HELP_VERIFY)
    verify.add_argument("graph", help=HELP_GRAPH)
    verify.add_argument("--sigma", required=True, help=HELP_SIGMA)

    gen = commands.add_parser("gen", help=HELP_GEN)
    source = gen.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", nargs="+", metavar="NAME_OR_PARAM")
    source.add_argument("--random", nargs=4, metavar=("N", "M", "DENSITY", "SEED"))
    source.add_argument("--random-staircase", nargs=3, metavar=("N", "M", "SEED"))
    source.add_argument("--random-laminar", nargs=3, metavar=("N", "M", "SEED"))

    render = commands.add_parser("render", help=HELP_RENDER)
    render.add_argument("graph", help=HELP_GRAPH)
    render.add_argument("--sigma", required=True, help=HELP_SIGMA)
    render.add_argument("--format", choices=RENDER_FORMATS, default=FORMAT_SVG)
    return parser


@input_error
def run(argv: list[str]) -> CommandOutcome:
    """Parses argv and dispatches to the subcommand handler."""
    args = build_parser().parse_args(argv)

    match args.command:
        case "solve-ab":
            return handle_solve_ab(args)
        case "solve-a":
            return handle_solve_a(args)
        case "recognize":
            return handle_recognize(args)
        case "patterns":
            return handle_patterns(args)
        case "verify":
            return handle_verify(args)
        case "gen":
            return handle_gen(args)
        case "render":
            return handle_render(args)


@keyboard_interrupt_error(handle_interrupt)
def main(argv: list[str] | None = None) -> int:
    """Runs one command and writes its outcome to the standard streams."""
    # Initialize the environment
    init_logging(logging.DEBUG if DEBUG else logging.WARNING)
    init(autoreset=True)  # Colorama for Windows compatibility

    outcome = run(sys.argv[1:] if argv is None else argv)
    if outcome.stdout:
        sys.stdout.write(outcome.stdout)
    if outcome.stderr:
        print(outcome.stderr, file=sys.stderr)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
