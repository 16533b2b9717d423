"""
General recognition: does g have a Stick representation at all?

No polynomial algorithm is known, so the auto method chains cheap
certificates and sufficient constructions before falling back to the
3-SAT encoding or exhaustive search, and answers unknown when every
applicable bound is exceeded.
"""

import logging
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations, permutations

from config import BRUTE_FORCE_VERTEX_BOUND, SAT3_VERTEX_BOUND, SC1P_BOUND
from services.stick_graph.core import (
    BipartiteGraph,
    GroundSequence,
    Ordering,
    StickRepresentation,
    Verdict,
    Vertex,
)
from services.stick_graph.oracle import (
    brute_force_stick,
    canonical_representation,
    is_valid_sequence,
)
from services.stick_graph.patterns import (
    contains_k44_minus_pm,
    find_universal_obstruction,
)
from services.stick_graph.sat import Assignment, CnfFormula, VariableBook, solve_sat_small
from services.stick_graph.stick_a import construct_small_a
from services.stick_graph.stick_ab import solve_fixed_ab
from services.stick_graph.sufficient import (
    construct_from_sc1p,
    construct_one_sided,
    find_sc1p,
)
from utils.constants import (
    CERT_EXHAUSTIVE,
    CERT_K44_MINUS_PM,
    CERT_SAT3_UNSAT,
    ERR_CONSTRUCTION_DEFECT,
    ERR_TOTALITY,
    ERR_UNKNOWN_METHOD,
    LIST_SEPARATOR,
    METHOD_AUTO,
    METHOD_BRUTE,
    METHOD_SAT3,
    RECOGNIZE_METHODS,
    VIA_BRUTE,
    VIA_ONE_SIDED,
    VIA_PATTERN_FREE,
    VIA_SAT3,
    VIA_SC1P,
    VIA_SMALL_A,
)
from validators.errors import BoundExceededError, ConstructionDefectError, ValidationError
from validators.graph_validators import ensure_within_bound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecognitionResult:
    """
    Answer of recognize.

    Attributes:
        verdict (Verdict): yes, no or unknown.
        provenance (str): The step that decided (or the last one tried).
        sequence (GroundSequence | None): Valid ground sequence on yes.
        representation (StickRepresentation | None): Its canonical representation.
        certificate (str | None): Obstruction or exhausted search on no.
    """

    verdict: Verdict
    provenance: str
    sequence: GroundSequence | None = None
    representation: StickRepresentation | None = None
    certificate: str | None = None

    @classmethod
    def accepted(
        cls, g: BipartiteGraph, sequence: GroundSequence, provenance: str
    ) -> "RecognitionResult":
        return cls(
            Verdict.YES, provenance, sequence, canonical_representation(g, sequence)
        )


def build_3sat_formula(g: BipartiteGraph) -> CnfFormula:
    """
    Ordering formula whose models are exactly the valid ground sequences.

    Edges force a before b; a 0-entry (j, p) with a_i b_p and a_j b_q
    edges forces b_p before a_j whenever a_i precedes a_j and b_p precedes
    b_q; every ordered vertex triple adds a transitivity clause.
    """
    vertices = g.vertices()
    book = VariableBook()
    book.register_all(vertices)
    formula = CnfFormula(book)

    for i, p in g.edges():
        formula.add_clause([book.literal(Vertex.a(i), Vertex.b(p))])

    for (i, p), (j, q) in permutations(g.edges(), 2):
        if i == j or p == q or g.matrix[j][p]:
            continue
        formula.add_clause(
            [
                -book.literal(Vertex.a(i), Vertex.a(j)),
                -book.literal(Vertex.b(p), Vertex.b(q)),
                -book.literal(Vertex.a(j), Vertex.b(p)),
            ]
        )

    for u, v, w in permutations(vertices, 3):
        formula.add_clause(
            [-book.literal(u, v), -book.literal(v, w), book.literal(u, w)]
        )
    return formula


def sequence_from_assignment(
    g: BipartiteGraph, formula: CnfFormula, assignment: Assignment
) -> GroundSequence:
    """
    Sorts the vertices by the precedence relation the model encodes.

    Raises:
        ConstructionDefectError: If the relation is not a total order.
    """
    book = formula.book

    def compare(v: Vertex, w: Vertex) -> int:
        if v == w:
            return 0
        return -1 if book.precedes(assignment, v, w) else 1

    ordered = sorted(g.vertices(), key=cmp_to_key(compare))
    for earlier, later in combinations(ordered, 2):
        if not book.precedes(assignment, earlier, later):
            raise ConstructionDefectError(ERR_TOTALITY.format(u=earlier, v=later))
    return GroundSequence(g.n_a, g.n_b, tuple(ordered))


def _recognize_brute(g: BipartiteGraph, jobs: int | None) -> RecognitionResult:
    sequence = brute_force_stick(g, jobs=jobs)
    if sequence is None:
        return RecognitionResult(Verdict.NO, VIA_BRUTE, certificate=CERT_EXHAUSTIVE)
    return RecognitionResult.accepted(g, sequence, VIA_BRUTE)


def _recognize_sat3(g: BipartiteGraph) -> RecognitionResult:
    ensure_within_bound("recognize sat3", g.n_a + g.n_b, SAT3_VERTEX_BOUND)
    formula = build_3sat_formula(g)
    assignment = solve_sat_small(formula)
    if assignment is None:
        return RecognitionResult(Verdict.NO, VIA_SAT3, certificate=CERT_SAT3_UNSAT)

    sequence = sequence_from_assignment(g, formula, assignment)
    verdict = is_valid_sequence(g, sequence)
    if not verdict:
        raise ConstructionDefectError(
            ERR_CONSTRUCTION_DEFECT.format(
                construction="3-SAT model", sigma=sequence, detail=verdict
            )
        )
    return RecognitionResult.accepted(g, sequence, VIA_SAT3)


def k44_certificate(rows: tuple[int, ...], cols: tuple[int, ...]) -> str:
    shown_rows = LIST_SEPARATOR.join(str(Vertex.a(i)) for i in rows)
    shown_cols = LIST_SEPARATOR.join(str(Vertex.b(p)) for p in cols)
    return f"{CERT_K44_MINUS_PM} rows={shown_rows} cols={shown_cols}"


def _constructive_steps(g: BipartiteGraph) -> RecognitionResult | None:
    """Sufficient conditions in increasing cost; a defect skips to the next."""
    identity_a = Ordering.identity(g.n_a)
    identity_b = Ordering.identity(g.n_b)

    if max(g.n_a, g.n_b) <= SC1P_BOUND:
        arrangement = find_sc1p(g)
        if arrangement is not None:
            try:
                sequence, _ = construct_from_sc1p(g, *arrangement)
                return RecognitionResult.accepted(g, sequence, VIA_SC1P)
            except ConstructionDefectError as exc:
                logger.warning("SC1P construction skipped: %s", exc)

    if g.n_a <= 3:
        try:
            _, sequence = construct_small_a(g, identity_a)
            return RecognitionResult.accepted(g, sequence, VIA_SMALL_A)
        except ConstructionDefectError as exc:
            logger.warning("Category construction skipped: %s", exc)

    if find_universal_obstruction(g) is None:
        result = solve_fixed_ab(g, identity_a, identity_b)
        if result:
            return RecognitionResult.accepted(g, result.sequence, VIA_PATTERN_FREE)
        logger.warning("Pattern-free graph %s rejected under identity orders", g)

    try:
        built = construct_one_sided(g, identity_a)
    except ConstructionDefectError as exc:
        logger.warning("One-sided construction skipped: %s", exc)
        built = None
    if built is not None:
        return RecognitionResult.accepted(g, built[0], VIA_ONE_SIDED)
    return None


def _recognize_auto(g: BipartiteGraph, jobs: int | None) -> RecognitionResult:
    obstruction = contains_k44_minus_pm(g)
    if obstruction is not None:
        return RecognitionResult(
            Verdict.NO, CERT_K44_MINUS_PM, certificate=k44_certificate(*obstruction)
        )

    constructed = _constructive_steps(g)
    if constructed is not None:
        return constructed

    size = g.n_a + g.n_b
    if size <= SAT3_VERTEX_BOUND:
        try:
            return _recognize_sat3(g)
        except BoundExceededError as exc:
            logger.debug("3-SAT path skipped: %s", exc)
    if size <= BRUTE_FORCE_VERTEX_BOUND:
        return _recognize_brute(g, jobs)
    return RecognitionResult(Verdict.UNKNOWN, METHOD_AUTO)


def recognize(
    g: BipartiteGraph, method: str = METHOD_AUTO, jobs: int | None = None
) -> RecognitionResult:
    """
    Decides Stick representability.

    brute runs the exhaustive search, sat3 solves the ordering formula,
    auto tries the K4,4-minus-matching certificate, the consecutive-ones,
    category, pattern-free and one-sided constructions, then sat3 and
    brute within their bounds, and otherwise answers unknown. Every yes is
    validated and every no carries a certificate.

    Raises:
        ValidationError: If method is unknown.
        BoundExceededError: If the explicit method's bound is exceeded.
    """
    logger.debug("recognize %s with method %s", g, method)
    match method:
        case "auto":
            return _recognize_auto(g, jobs)
        case "brute":
            return _recognize_brute(g, jobs)
        case "sat3":
            return _recognize_sat3(g)
        case _:
            raise ValidationError(
                ERR_UNKNOWN_METHOD.format(
                    method=method, known=LIST_SEPARATOR.join(RECOGNIZE_METHODS)
                )
            )


if __name__ == "__main__":
    # TESTS

    test_k44 = BipartiteGraph.from_rows(["0111", "1011", "1101", "1110"])
    test_result = recognize(test_k44)
    assert test_result.verdict is Verdict.NO
    assert test_result.certificate == "k44-minus-pm rows=a1,a2,a3,a4 cols=b1,b2,b3,b4"
    assert recognize(test_k44, METHOD_BRUTE).verdict is Verdict.NO

    test_c6 = BipartiteGraph.from_rows(["110", "011", "101"])
    assert recognize(test_c6).verdict is Verdict.YES
    assert recognize(test_c6, METHOD_SAT3).verdict is Verdict.YES

    test_perm = BipartiteGraph.from_rows(["010", "001", "100"])
    assert len(build_3sat_formula(test_perm)) > 0

    print("Recognition tests passed.")
