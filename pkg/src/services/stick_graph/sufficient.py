"""
Sufficient conditions with constructive proofs.

Simultaneous consecutive ones: if rows and columns can be permuted so that
the 1s of every row and every column are contiguous, a staircase ground
line separates the entries the extended segments would wrongly cross, and
straightening the staircase yields a representation.

One-sided drawings: if the neighbor intervals of B along sigma_A nest
without crossing, each nested vertex sitting between two consecutive
neighbors of its container, the B-vertices can be inserted after their
rightmost neighbors.

Both constructions are checked with is_valid_sequence before returning.
"""

import logging
from collections.abc import Iterator, Sequence
from itertools import combinations, pairwise

from config import SC1P_BOUND
from services.stick_graph.core import (
    BipartiteGraph,
    GroundSequence,
    Ordering,
    StickRepresentation,
    Vertex,
    ensure_orders_fit,
)
from services.stick_graph.oracle import canonical_representation, is_valid_sequence
from utils.constants import (
    ERR_CONSTRUCTION_DEFECT,
    ERR_NO_SC1P_ARRANGEMENT,
    ERR_NOT_SC1P,
)
from validators.errors import ConstructionDefectError, ValidationError
from validators.graph_validators import ensure_within_bound

logger = logging.getLogger(__name__)

_NOT_STARTED, _OPEN, _CLOSED = 0, 1, 2


def _consecutive_orders(
    lines: Sequence[Sequence[bool]], width: int
) -> Iterator[tuple[int, ...]]:
    """
    Orders of range(width) under which every line has contiguous 1s.

    Backtracks left to right keeping, per line, whether its block of 1s has
    not started, is open or is closed; closing a block while 1s remain
    prunes the branch. Positions with identical contents are taken in index
    order only, so each distinct arrangement is listed once.
    """
    state = [_NOT_STARTED] * len(lines)
    remaining = [sum(line) for line in lines]
    signature = [tuple(line[x] for line in lines) for x in range(width)]
    placed = [False] * width
    order: list[int] = []

    def apply(x: int) -> list[tuple[int, int, int]] | None:
        changes = []
        for index, line in enumerate(lines):
            current = state[index]
            if line[x]:
                if current == _CLOSED:
                    revert(changes)
                    return None
                changes.append((index, current, remaining[index]))
                state[index] = _OPEN
                remaining[index] -= 1
            elif current == _OPEN:
                if remaining[index] > 0:
                    revert(changes)
                    return None
                changes.append((index, current, remaining[index]))
                state[index] = _CLOSED
        return changes

    def revert(changes: list[tuple[int, int, int]]) -> None:
        for index, old_state, old_remaining in reversed(changes):
            state[index] = old_state
            remaining[index] = old_remaining

    def extend() -> Iterator[tuple[int, ...]]:
        if len(order) == width:
            yield tuple(order)
            return
        for x in range(width):
            if placed[x]:
                continue
            if any(
                not placed[y] and signature[y] == signature[x] for y in range(x)
            ):
                continue
            changes = apply(x)
            if changes is None:
                continue
            placed[x] = True
            order.append(x)
            yield from extend()
            order.pop()
            placed[x] = False
            revert(changes)

    yield from extend()


def _is_contiguous(line: Sequence[bool]) -> bool:
    ones = [index for index, value in enumerate(line) if value]
    return not ones or ones[-1] - ones[0] + 1 == len(ones)


def find_sc1p(
    g: BipartiteGraph, bound: int | None = None
) -> tuple[Ordering, Ordering] | None:
    """
    Row and column orders with contiguous 1s in every row and column.

    Row contiguity depends only on the column order and vice versa, so the
    two searches run independently; each returns its lexicographically
    first solution.

    Raises:
        BoundExceededError: If n_a or n_b exceeds the bound.
    """
    bound = SC1P_BOUND if bound is None else bound
    ensure_within_bound("find_sc1p", max(g.n_a, g.n_b), bound)
    cols = next(_consecutive_orders(g.matrix, g.n_b), None)
    if cols is None:
        return None
    rows = next(_consecutive_orders(g.columns, g.n_a), None)
    if rows is None:
        return None
    return Ordering(rows), Ordering(cols)


def _staircase_sequence(
    g: BipartiteGraph, row_order: Ordering, col_order: Ordering
) -> GroundSequence | None:
    """
    Ground sequence from a consecutive-ones arrangement, or None if blocked.

    A 0-entry left of its row's first 1 whose column ends above the row is
    violated: extending both segments would cross it. Row r must touch the
    ground line right of every violated column; taking running maxima gives
    a monotone staircase t. The arrangement is blocked when some row would
    have to start right of its own first 1.

    The staircase is straightened bend by bend from the top: at a bend of
    width w the rows above it move up and the columns right of it move
    right by w * (n_a + n_b + 1). Afterwards every touch point lies on
    x + y = s, and sorting touch abscissae gives sigma.
    """
    m = g.permuted(row_order.perm, col_order.perm)
    n_rows, n_cols = m.shape
    row_first = [
        next((c for c, value in enumerate(row) if value), None) for row in m.matrix
    ]
    col_last = [
        next((r for r in reversed(range(n_rows)) if column[r]), None)
        for column in m.columns
    ]

    staircase = []
    running = 0
    for r in range(n_rows):
        first = row_first[r]
        if first is not None:
            violated = [
                c for c in range(first) if col_last[c] is not None and col_last[c] < r
            ]
            if violated:
                running = max(running, violated[-1] + 1)
            if running > first:
                logger.debug("Row %d of arrangement is blocked at column %d", r, first)
                return None
        staircase.append(running)

    offset = n_rows + n_cols + 1
    height = [n_rows - r for r in range(n_rows)]
    abscissa = [c + 1 for c in range(n_cols)]
    previous = 0
    for r, step_to in enumerate(staircase):
        width = step_to - previous
        if width:
            for above in range(r):
                height[above] += offset * width
            for c in range(step_to, n_cols):
                abscissa[c] += offset * width
        previous = step_to
    line = offset * previous + 1

    touches = [(line - height[r], Vertex.a(row_order[r])) for r in range(n_rows)]
    touches += [(abscissa[c], Vertex.b(col_order[c])) for c in range(n_cols)]
    touches.sort()
    return GroundSequence(g.n_a, g.n_b, tuple(vertex for _, vertex in touches))


def construct_from_sc1p(
    g: BipartiteGraph, row_perm: Ordering, col_perm: Ordering
) -> tuple[GroundSequence, StickRepresentation]:
    """
    Representation from a simultaneous consecutive-ones arrangement.

    When the given arrangement is blocked, the other consecutive-ones
    arrangements are tried in lexicographic order.

    Raises:
        DimensionMismatchError: If the orders do not match g.
        ValidationError: If the arrangement does not have consecutive ones.
        ConstructionDefectError: If no arrangement works or the result is invalid.
    """
    ensure_orders_fit(g, row_perm, col_perm)
    arranged = g.permuted(row_perm.perm, col_perm.perm)
    if not all(map(_is_contiguous, arranged.matrix)) or not all(
        map(_is_contiguous, arranged.columns)
    ):
        raise ValidationError(ERR_NOT_SC1P)

    sequence = _staircase_sequence(g, row_perm, col_perm)
    if sequence is None:
        logger.warning(
            "Arrangement rows=%s cols=%s is blocked, trying the others",
            row_perm,
            col_perm,
        )
        candidates = (
            _staircase_sequence(g, Ordering(rows), Ordering(cols))
            for cols in _consecutive_orders(g.matrix, g.n_b)
            for rows in _consecutive_orders(g.columns, g.n_a)
        )
        sequence = next((found for found in candidates if found is not None), None)
        if sequence is None:
            raise ConstructionDefectError(ERR_NO_SC1P_ARRANGEMENT)

    verdict = is_valid_sequence(g, sequence)
    if not verdict:
        raise ConstructionDefectError(
            ERR_CONSTRUCTION_DEFECT.format(
                construction="construct_from_sc1p", sigma=sequence, detail=verdict
            )
        )
    return sequence, canonical_representation(g, sequence)


def _fits_between(inner: list[int], outer: list[int]) -> bool:
    """True iff inner's span lies between two consecutive entries of outer."""
    low, high = inner[0], inner[-1]
    return any(left <= low and high <= right for left, right in pairwise(outer))


def construct_one_sided(
    g: BipartiteGraph, sigma_a: Ordering
) -> tuple[GroundSequence, StickRepresentation] | None:
    """
    Representation from nested neighbor intervals along sigma_a.

    Each B-vertex of degree >= 1 spans the sigma_A positions of its
    neighbors. Two spans may be disjoint or share one endpoint; otherwise
    one must lie between two consecutive neighbors of the other (equal
    spans need this one way round). Crossing spans make the condition fail
    and None is returned; that says nothing about Stick-ness itself.

    sigma lists A in sigma_a order and puts every B-vertex right after its
    rightmost neighbor, more deeply nested vertices first, then by index.
    Isolated B-vertices go last.

    Raises:
        DimensionMismatchError: If sigma_a does not match g.
        ConstructionDefectError: If the produced sequence fails validation.
    """
    ensure_orders_fit(g, sigma_a)
    position = sigma_a.positions()
    spans = {
        p: sorted(position[i] for i in g.neighbors_of_b(p))
        for p in range(g.n_b)
        if g.degree_b(p)
    }

    for p, q in combinations(spans, 2):
        outer, inner = spans[p], spans[q]
        if outer[-1] <= inner[0] or inner[-1] <= outer[0]:
            continue
        if (outer[0], outer[-1]) == (inner[0], inner[-1]):
            nested = _fits_between(inner, outer) or _fits_between(outer, inner)
        elif outer[0] <= inner[0] and inner[-1] <= outer[-1]:
            nested = _fits_between(inner, outer)
        elif inner[0] <= outer[0] and outer[-1] <= inner[-1]:
            nested = _fits_between(outer, inner)
        else:
            nested = False
        if not nested:
            logger.debug("Spans of %s and %s cross", Vertex.b(p), Vertex.b(q))
            return None

    depth = {
        p: sum(
            1
            for q in spans
            if q != p
            and _fits_between(spans[p], spans[q])
            and not _fits_between(spans[q], spans[p])
        )
        for p in spans
    }
    after: dict[int, list[int]] = {}
    for p, span in spans.items():
        after.setdefault(span[-1], []).append(p)

    seq = []
    for pos, i in enumerate(sigma_a):
        seq.append(Vertex.a(i))
        placed_here = sorted(after.get(pos, []), key=lambda p: (-depth[p], p))
        seq.extend(Vertex.b(p) for p in placed_here)
    seq.extend(Vertex.b(p) for p in range(g.n_b) if p not in spans)

    sequence = GroundSequence(g.n_a, g.n_b, tuple(seq))
    verdict = is_valid_sequence(g, sequence)
    if not verdict:
        raise ConstructionDefectError(
            ERR_CONSTRUCTION_DEFECT.format(
                construction="construct_one_sided", sigma=sequence, detail=verdict
            )
        )
    return sequence, canonical_representation(g, sequence)


if __name__ == "__main__":
    # TESTS

    test_identity = BipartiteGraph.from_rows(["100", "010", "001"])
    test_sequence, _ = construct_from_sc1p(
        test_identity, Ordering.identity(3), Ordering.identity(3)
    )
    assert str(test_sequence) == "a1,b1,a2,b2,a3,b3"

    test_cyclic = BipartiteGraph.from_rows(["010", "001", "100"])
    assert _staircase_sequence(test_cyclic, Ordering.identity(3), Ordering.identity(3)) is None
    assert construct_from_sc1p(test_cyclic, Ordering.identity(3), Ordering.identity(3))

    test_k44 = BipartiteGraph.from_rows(["0111", "1011", "1101", "1110"])
    assert find_sc1p(test_k44) is None

    test_c6 = BipartiteGraph.from_rows(["110", "011", "101"])
    test_sequence, _ = construct_one_sided(test_c6, Ordering.identity(3))
    assert str(test_sequence) == "a1,a2,b2,a3,b3,b1"

    print("Sufficient-condition tests passed.")
