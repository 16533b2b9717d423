"""
Recognition with only the order of A fixed.

Every way the rows can give rise to P1, P2 or P3 is turned into 2-SAT
clauses over the pair variables of B, so that a satisfying assignment
orients B while avoiding every pattern. The orientation is checked for
acyclicity and the resulting order of B is always re-validated by the
fixed-orders solver; an anomaly falls back to exhaustive search.

With at most three A-vertices a fixed category order of the columns always
works; construct_small_a builds it directly.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial

from config import FIXED_A_SEARCH_BOUND
from services.stick_graph.core import (
    BipartiteGraph,
    GroundSequence,
    Ordering,
    StickRepresentation,
    Vertex,
    ensure_orders_fit,
)
from services.stick_graph.oracle import brute_force_fixed_a, canonical_representation
from services.stick_graph.sat import (
    Assignment,
    CnfFormula,
    VariableBook,
    solve_2sat,
    solve_sat_small,
)
from services.stick_graph.stick_ab import solve_fixed_ab
from utils.constants import (
    ERR_DISCREPANCY,
    ERR_SMALL_A_REJECTED,
    ERR_SMALL_A_TOO_LARGE,
    VIA_2SAT,
    VIA_FALLBACK_BRUTE,
    VIA_FALLBACK_SAT,
)
from validators.errors import ConstructionDefectError, DiscrepancyError, ValidationError

logger = logging.getLogger(__name__)

# Column categories by incidence with (r1, r2, r3) of sigma_A
SMALL_A_CATEGORY_ORDER = (
    (1, 0, 0),
    (0, 1, 0),
    (1, 1, 0),
    (0, 0, 1),
    (0, 1, 1),
    (1, 1, 1),
    (1, 0, 1),
    (0, 0, 0),
)
_CATEGORY_RANK = {key: rank for rank, key in enumerate(SMALL_A_CATEGORY_ORDER)}


@dataclass(frozen=True)
class FixedARoles:
    """
    Column roles that give rise to a pattern under a fixed order of A.

    Attributes:
        p1 (frozenset[tuple[int, int, int]]): (p, q, r) triples giving rise to P1.
        p3 (frozenset[tuple[int, int, int]]): (p, q, r) triples giving rise to P3.
        p2 (frozenset[tuple[int, int]]): (p, q) pairs giving rise to P2.
    """

    p1: frozenset[tuple[int, int, int]] = field(default_factory=frozenset)
    p3: frozenset[tuple[int, int, int]] = field(default_factory=frozenset)
    p2: frozenset[tuple[int, int]] = field(default_factory=frozenset)


@dataclass(frozen=True)
class FixedAResult:
    """Answer of solve_fixed_a; via names the step that produced it."""

    accepted: bool
    via: str
    sigma_b: Ordering | None = None
    sequence: GroundSequence | None = None
    representation: StickRepresentation | None = None

    def __bool__(self):
        return self.accepted


def _arranged_rows(g: BipartiteGraph, sigma_a: Ordering) -> list[tuple[bool, ...]]:
    return [g.matrix[i] for i in sigma_a]


def _roles_fast(rows: list[tuple[bool, ...]], n_b: int) -> FixedARoles:
    n_rows = len(rows)
    first_one = [next((j for j in range(n_rows) if rows[j][q]), None) for q in range(n_b)]
    last_one = [
        next((j for j in reversed(range(n_rows)) if rows[j][p]), None)
        for p in range(n_b)
    ]
    ones_in_row = [[p for p, value in enumerate(row) if value] for row in rows]

    # earliest[q][r]: first row j below firstOne(q) with a 0 in q and a 1 in r
    earliest: list[list[int | None]] = [[None] * n_b for _ in range(n_b)]
    for q in range(n_b):
        if first_one[q] is None:
            continue
        for j in range(first_one[q] + 1, n_rows):
            if rows[j][q]:
                continue
            for r in ones_in_row[j]:
                if earliest[q][r] is None:
                    earliest[q][r] = j

    p1 = set()
    for q in range(n_b):
        for r in range(n_b):
            j = earliest[q][r]
            if j is None:
                continue
            for p in range(n_b):
                if p not in (q, r) and last_one[p] is not None and last_one[p] > j:
                    p1.add((p, q, r))

    p3 = set()
    for j, ones in enumerate(ones_in_row):
        if len(ones) < 2:
            continue
        for q in range(n_b):
            if rows[j][q] or first_one[q] is None or first_one[q] >= j:
                continue
            for p, r in permutations(ones, 2):
                p3.add((p, q, r))

    p2 = set()
    for p in range(n_b):
        if first_one[p] is None:
            continue
        for j in range(first_one[p] + 1, last_one[p]):
            if not rows[j][p]:
                p2.update((p, q) for q in ones_in_row[j])

    return FixedARoles(frozenset(p1), frozenset(p3), frozenset(p2))


def _roles_naive(rows: list[tuple[bool, ...]], n_b: int) -> FixedARoles:
    """Direct enumeration of row and column role assignments."""
    p1, p3, p2 = set(), set(), set()
    for p, q, r in permutations(range(n_b), 3):
        for i, j, k in combinations(range(len(rows)), 3):
            if rows[i][q] and not rows[j][q] and rows[j][r] and rows[k][p]:
                p1.add((p, q, r))
                break
        for i, j in combinations(range(len(rows)), 2):
            if rows[i][q] and rows[j][p] and not rows[j][q] and rows[j][r]:
                p3.add((p, q, r))
                break
    for p, q in permutations(range(n_b), 2):
        for i, j, k in combinations(range(len(rows)), 3):
            if rows[i][p] and not rows[j][p] and rows[k][p] and rows[j][q]:
                p2.add((p, q))
                break
    return FixedARoles(frozenset(p1), frozenset(p3), frozenset(p2))


def fixed_a_roles(
    g: BipartiteGraph, sigma_a: Ordering, naive: bool = False
) -> FixedARoles:
    """
    Column roles giving rise to P1, P3 or P2 under sigma_a.

    The default scan precomputes firstOne(q), lastOne(p) and, per column
    pair, the earliest admissible middle row, in O(n_b^3 + n_a * n_b^2);
    naive=True enumerates every role assignment instead.

    Raises:
        DimensionMismatchError: If sigma_a does not match g.
    """
    ensure_orders_fit(g, sigma_a)
    rows = _arranged_rows(g, sigma_a)
    return _roles_naive(rows, g.n_b) if naive else _roles_fast(rows, g.n_b)


def build_fixed_a_formula(
    g: BipartiteGraph, sigma_a: Ordering, naive: bool = False
) -> CnfFormula:
    """
    2-SAT formula whose models are the orientations of B avoiding all
    patterns role by role.

    A P1 or P3 triple (p, q, r) forbids p < q < r through the clauses
    (not q<r or q<p) and (not p<q or r<q). With one variable per pair the
    two clauses coincide, so each triple contributes a single clause. A P2
    pair (p, q) yields the unit clause q<p. Every B-pair is registered, so
    a model orients all of them.

    Raises:
        DimensionMismatchError: If sigma_a does not match g.
    """
    roles = fixed_a_roles(g, sigma_a, naive=naive)
    book = VariableBook()
    book.register_all(Vertex.b(p) for p in range(g.n_b))
    formula = CnfFormula(book)

    def before(x: int, y: int) -> int:
        return book.literal(Vertex.b(x), Vertex.b(y))

    for p, q, r in sorted(roles.p1 | roles.p3):
        formula.add_clause([-before(q, r), before(q, p)])
        formula.add_clause([-before(p, q), before(r, q)])
    for p, q in sorted(roles.p2):
        formula.add_clause([before(q, p)])

    logger.debug(
        "fixed-A formula: %d P1, %d P3, %d P2 roles, %d clauses",
        len(roles.p1),
        len(roles.p3),
        len(roles.p2),
        len(formula),
    )
    return formula


def _tournament_order(
    n_b: int, book: VariableBook, assignment: Assignment
) -> Ordering | None:
    """Order of B by descending wins, or None when the orientation has a cycle."""
    wins = [0] * n_b
    for p, q in combinations(range(n_b), 2):
        if book.precedes(assignment, Vertex.b(p), Vertex.b(q)):
            wins[p] += 1
        else:
            wins[q] += 1
    # A tournament is transitive iff its scores are pairwise distinct
    if len(set(wins)) != n_b:
        return None
    return Ordering(tuple(sorted(range(n_b), key=lambda p: -wins[p])))


def _with_transitivity(formula: CnfFormula, n_b: int) -> CnfFormula:
    book = formula.book
    extended = CnfFormula(book)
    for clause in formula:
        extended.add_clause(clause)
    for u, v, w in permutations(range(n_b), 3):
        extended.add_clause(
            [
                -book.literal(Vertex.b(u), Vertex.b(v)),
                -book.literal(Vertex.b(v), Vertex.b(w)),
                book.literal(Vertex.b(u), Vertex.b(w)),
            ]
        )
    return extended


def _resolve_anomaly(
    g: BipartiteGraph, sigma_a: Ordering, formula: CnfFormula
) -> FixedAResult:
    """Exact answer after the 2-SAT order failed; disagreement raises."""
    search_size = factorial(g.n_b) * comb(g.n_a + g.n_b, g.n_a)
    if search_size <= FIXED_A_SEARCH_BOUND:
        found = brute_force_fixed_a(g, sigma_a)
        if found is None:
            raise DiscrepancyError(ERR_DISCREPANCY.format(order=sigma_a))
        sigma_b, sequence = found
        return FixedAResult(
            True,
            VIA_FALLBACK_BRUTE,
            sigma_b,
            sequence,
            canonical_representation(g, sequence),
        )

    assignment = solve_sat_small(_with_transitivity(formula, g.n_b))
    if assignment is None:
        raise DiscrepancyError(ERR_DISCREPANCY.format(order=sigma_a))
    sigma_b = _tournament_order(g.n_b, formula.book, assignment)
    result = solve_fixed_ab(g, sigma_a, sigma_b)
    if not result:
        raise DiscrepancyError(ERR_DISCREPANCY.format(order=sigma_a))
    return FixedAResult(
        True, VIA_FALLBACK_SAT, sigma_b, result.sequence, result.representation
    )


def solve_fixed_a(g: BipartiteGraph, sigma_a: Ordering) -> FixedAResult:
    """
    Decides whether some order of B admits a representation with sigma_a.

    Unsatisfiable formula means no. Otherwise the orientation of B read
    from the model must be acyclic and accepted by solve_fixed_ab; if
    either check fails, the anomaly is logged and settled exactly.

    Raises:
        DimensionMismatchError: If sigma_a does not match g.
        BoundExceededError: If an anomaly needs a search beyond its bound.
        DiscrepancyError: If exact search contradicts a satisfiable formula.
    """
    formula = build_fixed_a_formula(g, sigma_a)
    assignment = solve_2sat(formula)
    if assignment is None:
        return FixedAResult(False, VIA_2SAT)

    sigma_b = _tournament_order(g.n_b, formula.book, assignment)
    if sigma_b is None:
        logger.warning("2-SAT model orients B cyclically for sigma_A=%s", sigma_a)
    else:
        result = solve_fixed_ab(g, sigma_a, sigma_b)
        if result:
            return FixedAResult(
                True, VIA_2SAT, sigma_b, result.sequence, result.representation
            )
        logger.warning(
            "2-SAT order sigma_B=%s rejected for sigma_A=%s", sigma_b, sigma_a
        )
    return _resolve_anomaly(g, sigma_a, formula)


def construct_small_a(
    g: BipartiteGraph, sigma_a: Ordering
) -> tuple[Ordering, GroundSequence]:
    """
    Orders the columns by incidence category when n_a <= 3.

    Each column is keyed by its incidence vector along sigma_A, padded with
    zeros to length three, and sorted by SMALL_A_CATEGORY_ORDER, ties by
    index.

    Raises:
        ValidationError: If n_a > 3.
        ConstructionDefectError: If the fixed-orders solver rejects the order.
    """
    if g.n_a > 3:
        raise ValidationError(ERR_SMALL_A_TOO_LARGE.format(n_a=g.n_a))
    ensure_orders_fit(g, sigma_a)

    def category(p: int) -> int:
        key = tuple(int(g.matrix[row][p]) for row in sigma_a)
        return _CATEGORY_RANK[key + (0,) * (3 - len(key))]

    sigma_b = Ordering(tuple(sorted(range(g.n_b), key=lambda p: (category(p), p))))
    result = solve_fixed_ab(g, sigma_a, sigma_b)
    if not result:
        raise ConstructionDefectError(
            ERR_SMALL_A_REJECTED.format(order=sigma_b, sigma_a=sigma_a)
        )
    return sigma_b, result.sequence


if __name__ == "__main__":
    # TESTS

    test_perm = BipartiteGraph.from_rows(["010", "001", "100"])
    test_roles = fixed_a_roles(test_perm, Ordering.identity(3))
    assert test_roles.p1 == {(0, 1, 2)} and not test_roles.p3 and not test_roles.p2
    assert test_roles == fixed_a_roles(test_perm, Ordering.identity(3), naive=True)

    test_result = solve_fixed_a(test_perm, Ordering.identity(3))
    assert test_result and test_result.sigma_b.perm != (0, 1, 2)

    test_remark_b = BipartiteGraph.from_rows(["10", "01", "10", "01"])
    assert not solve_fixed_a(test_remark_b, Ordering.identity(4))

    test_sigma_b, _ = construct_small_a(test_perm, Ordering.identity(3))
    assert test_sigma_b.perm == (1, 2, 0)

    print("Fixed-A solver tests passed.")
