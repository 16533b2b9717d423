"""
Command handlers for the CLI application.

Each handler corresponds to one subcommand: it parses its inputs, calls
the library and turns the answer into a CommandOutcome. Exit codes follow
the verdict: 0 yes/valid, 1 no/invalid, 2 unknown.
"""

import logging
import sys
from argparse import Namespace

from decorators.input_error import CommandOutcome, input_error
from services.stick_graph.core import Verdict
from services.stick_graph.generator import (
    family,
    random_bipartite,
    random_laminar,
    random_staircase,
)
from services.stick_graph.oracle import canonical_representation, is_valid_sequence
from services.stick_graph.patterns import (
    classify_h_member,
    contains_k44_minus_pm,
    find_fixed_a_obstruction,
    find_ordered_pattern,
    find_universal_obstruction,
)
from services.stick_graph.recognize import build_3sat_formula, k44_certificate, recognize
from services.stick_graph.render import render, verify_geometry
from services.stick_graph.sat import export_dimacs
from services.stick_graph.stick_a import build_fixed_a_formula, solve_fixed_a
from services.stick_graph.stick_ab import extract_pattern_from_cycle, solve_fixed_ab
from utils.constants import (
    CERT_2SAT_UNSAT,
    CERT_FIXED_A_OBSTRUCTION,
    EMIT_CYCLE,
    EMIT_DIMACS,
    EMIT_PATTERN,
    ERR_CONSTRUCTION_DEFECT,
    ERR_PARSE_NUMBER,
    EXIT_NO,
    EXIT_UNKNOWN,
    EXIT_YES,
    FORMAT_ASCII,
    FORMAT_SVG,
    MSG_NONE,
)
from utils.input_parser import parse_ordering, parse_sigma, read_graph_file
from utils.text_utils import format_graph, format_lines, format_status, format_vertices
from validators.args_validators import ensure_args_have_n_arguments, ensure_option_present
from validators.errors import ConstructionDefectError, ValidationError

logger = logging.getLogger(__name__)

_EXIT_CODES = {Verdict.YES: EXIT_YES, Verdict.NO: EXIT_NO, Verdict.UNKNOWN: EXIT_UNKNOWN}


def _outcome(
    command: str, verdict: Verdict, stdout: str, details: str = ""
) -> CommandOutcome:
    return CommandOutcome(
        _EXIT_CODES[verdict], stdout, format_status(command, verdict, details)
    )


def _drawing(representation, emit: str) -> str | None:
    """SVG or ASCII drawing when emit asks for one, otherwise None."""
    if emit in (FORMAT_SVG, FORMAT_ASCII):
        return render(representation, emit)
    return None


def _to_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValidationError(ERR_PARSE_NUMBER.format(token=token))


def _to_float(token: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ValidationError(ERR_PARSE_NUMBER.format(token=token))


@input_error
def handle_solve_ab(args: Namespace) -> CommandOutcome:
    """
    Fixed orders of both sides.

    Accepted: sigma, svg or ascii as asked; cycle and pattern print "none".
    Rejected: cycle prints the cycle of H, every other emit prints the
    forbidden pattern extracted from it.
    """
    g = read_graph_file(args.graph)
    sigma_a = parse_ordering(args.order_a)
    sigma_b = parse_ordering(args.order_b)
    result = solve_fixed_ab(g, sigma_a, sigma_b)

    if result:
        if args.emit in (EMIT_CYCLE, EMIT_PATTERN):
            stdout = format_lines(MSG_NONE)
        else:
            stdout = _drawing(result.representation, args.emit) or format_lines(
                result.sequence
            )
        return _outcome("solve-ab", Verdict.YES, stdout)

    if args.emit == EMIT_CYCLE:
        stdout = format_lines(format_vertices(result.cycle))
    else:
        pattern = extract_pattern_from_cycle(
            result.digraph, result.cycle, g, sigma_a, sigma_b
        )
        stdout = format_lines(pattern)
    return _outcome("solve-ab", Verdict.NO, stdout)


@input_error
def handle_solve_a(args: Namespace) -> CommandOutcome:
    """
    Fixed order of A.

    dimacs writes the 2-SAT formula without solving it. Otherwise a yes
    prints sigma (or its SVG) and a no prints the 4x2 obstruction when one
    is present, else that the formula is unsatisfiable.
    """
    g = read_graph_file(args.graph)
    sigma_a = parse_ordering(args.order_a)

    if args.emit == EMIT_DIMACS:
        return CommandOutcome(EXIT_YES, export_dimacs(build_fixed_a_formula(g, sigma_a)))

    result = solve_fixed_a(g, sigma_a)
    if result:
        stdout = _drawing(result.representation, args.emit) or format_lines(
            result.sequence
        )
        return _outcome("solve-a", Verdict.YES, stdout, result.via)

    obstruction = find_fixed_a_obstruction(g, sigma_a)
    certificate = (
        f"{CERT_FIXED_A_OBSTRUCTION} {obstruction}"
        if obstruction is not None
        else CERT_2SAT_UNSAT
    )
    return _outcome("solve-a", Verdict.NO, format_lines(certificate), result.via)


@input_error
def handle_recognize(args: Namespace) -> CommandOutcome:
    """
    No order fixed.

    dimacs writes the 3-SAT formula without solving it. A no always prints
    its certificate; a yes prints sigma, or the SVG drawing.
    """
    g = read_graph_file(args.graph)

    if args.emit == EMIT_DIMACS:
        return CommandOutcome(EXIT_YES, export_dimacs(build_3sat_formula(g)))

    result = recognize(g, args.method, args.jobs)
    match result.verdict:
        case Verdict.YES:
            stdout = _drawing(result.representation, args.emit) or format_lines(
                result.sequence
            )
        case Verdict.NO:
            stdout = format_lines(result.certificate)
        case _:
            stdout = ""
    return _outcome("recognize", result.verdict, stdout, result.provenance)


@input_error
def handle_patterns(args: Namespace) -> CommandOutcome:
    """
    Prints the first occurrence found, or "none".

    Exit 1 when an obstruction is found, 0 otherwise. The universal search
    also prints the family member the occurrence induces.
    """
    g = read_graph_file(args.graph)

    if args.ordered:
        ensure_option_present(args.order_a, "--order-a", "--ordered")
        ensure_option_present(args.order_b, "--order-b", "--ordered")
        found = find_ordered_pattern(
            g, parse_ordering(args.order_a), parse_ordering(args.order_b)
        )
        lines = [found] if found is not None else []
    elif args.universal:
        found = find_universal_obstruction(g)
        lines = [found, classify_h_member(g, found)] if found is not None else []
    elif args.fixed_a_obstruction:
        ensure_option_present(args.order_a, "--order-a", "--fixed-a-obstruction")
        found = find_fixed_a_obstruction(g, parse_ordering(args.order_a))
        lines = [f"{CERT_FIXED_A_OBSTRUCTION} {found}"] if found is not None else []
    else:
        found = contains_k44_minus_pm(g)
        lines = [k44_certificate(*found)] if found is not None else []

    if not lines:
        return _outcome("patterns", Verdict.YES, format_lines(MSG_NONE))
    return _outcome("patterns", Verdict.NO, format_lines(*lines))


@input_error
def handle_verify(args: Namespace) -> CommandOutcome:
    """
    Checks sigma with is_valid_sequence and cross-checks the canonical
    drawing geometrically; the two must agree.
    """
    g = read_graph_file(args.graph)
    sigma = parse_sigma(args.sigma, g.n_a, g.n_b)
    verdict = is_valid_sequence(g, sigma)
    report = verify_geometry(canonical_representation(g, sigma), g)
    if bool(verdict) != bool(report):
        raise ConstructionDefectError(
            ERR_CONSTRUCTION_DEFECT.format(
                construction="verify", sigma=sigma, detail=report
            )
        )
    outcome = Verdict.YES if verdict else Verdict.NO
    return _outcome("verify", outcome, format_lines(verdict))


@input_error
def handle_gen(args: Namespace) -> CommandOutcome:
    """Writes the generated graph in matrix format."""
    if args.family:
        name, *params = args.family
        g = family(name, [_to_int(value) for value in params])
    elif args.random:
        ensure_args_have_n_arguments(args.random, 4, "n m density seed")
        n_a, n_b, density, seed = args.random
        g = random_bipartite(_to_int(n_a), _to_int(n_b), _to_float(density), _to_int(seed))
    elif args.random_staircase:
        ensure_args_have_n_arguments(args.random_staircase, 3, "n m seed")
        g = random_staircase(*map(_to_int, args.random_staircase))
    else:
        ensure_args_have_n_arguments(args.random_laminar, 3, "n m seed")
        g = random_laminar(*map(_to_int, args.random_laminar))
    return CommandOutcome(EXIT_YES, format_graph(g))


@input_error
def handle_render(args: Namespace) -> CommandOutcome:
    """Draws the canonical representation; exit 1 if sigma is invalid."""
    g = read_graph_file(args.graph)
    sigma = parse_sigma(args.sigma, g.n_a, g.n_b)
    verdict = is_valid_sequence(g, sigma)
    drawing = render(canonical_representation(g, sigma), args.format)
    outcome = Verdict.YES if verdict else Verdict.NO
    return _outcome("render", outcome, drawing, str(verdict))


def handle_interrupt(prefix: str = "", suffix: str = "") -> int:
    """Reports an interrupted search as unknown."""
    print(f"{prefix}{suffix}", file=sys.stderr)
    return EXIT_UNKNOWN
