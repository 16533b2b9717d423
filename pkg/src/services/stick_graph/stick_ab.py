"""
Recognition with both side orders fixed.

The orders sigma_A and sigma_B, the edge rule (a before each neighbor b)
and the corner rule (a 0-entry with a 1 above and a 1 to the right forces
the column's b before the row's a) define a precedence digraph H. A
representation with the given orders exists iff H is acyclic; a topological
order of H is then a valid ground sequence. Everything runs in
O(n_a * n_b).
"""

import heapq
import logging
from dataclasses import dataclass
from itertools import pairwise

from services.stick_graph.core import (
    BipartiteGraph,
    ConstraintDigraph,
    GroundSequence,
    Ordering,
    PatternKind,
    PatternOccurrence,
    StickRepresentation,
    Vertex,
    ensure_orders_fit,
)
from services.stick_graph.oracle import canonical_representation, is_valid_sequence
from utils.constants import (
    ERR_CONSTRUCTION_DEFECT,
    ERR_CYCLE_NO_B,
    ERR_CYCLE_SHAPE,
    ERR_NOT_A_CYCLE,
    LIST_SEPARATOR,
)
from validators.errors import ConstructionDefectError, ValidationError
from validators.graph_validators import ensure_size_matches

logger = logging.getLogger(__name__)

_WHITE, _GRAY, _BLACK = 0, 1, 2


@dataclass(frozen=True)
class FixedOrderResult:
    """
    Answer of solve_fixed_ab.

    On acceptance sequence and representation are set; on rejection cycle
    holds a directed cycle of the digraph, starting at its rightmost
    B-vertex in sigma_B.
    """

    accepted: bool
    digraph: ConstraintDigraph
    sequence: GroundSequence | None = None
    representation: StickRepresentation | None = None
    cycle: tuple[Vertex, ...] | None = None

    def __bool__(self):
        return self.accepted


def build_constraint_digraph(
    g: BipartiteGraph, sigma_a: Ordering, sigma_b: Ordering
) -> ConstraintDigraph:
    """
    Builds H: both order paths, a C1 edge a_i -> b_p per 1-entry, and a C2
    edge b_p -> a_j per 0-entry (j, p) with a 1 above it in its column and a
    1 to its right in its row.

    The corner entries are found with one right-to-left pass per row:
    seen_above[p] records whether an earlier row has a 1 in column p, and
    one_to_right whether the current row has a 1 further right.

    Raises:
        DimensionMismatchError: If the orders do not match g.
    """
    ensure_orders_fit(g, sigma_a, sigma_b)
    n_a, n_b = g.shape
    successors: list[list[int]] = [[] for _ in range(n_a + n_b)]
    indegree = [0] * (n_a + n_b)

    for source, target in pairwise(sigma_a):
        successors[source].append(target)
        indegree[target] += 1
    for source, target in pairwise(sigma_b):
        successors[n_a + source].append(n_a + target)
        indegree[n_a + target] += 1

    # C1
    for i, row in enumerate(g.matrix):
        targets = [n_a + p for p, value in enumerate(row) if value]
        successors[i].extend(targets)
        for target in targets:
            indegree[target] += 1

    # C2
    columns_right_to_left = tuple(reversed(sigma_b.perm))
    seen_above = [False] * n_b
    for j in sigma_a:
        row = g.matrix[j]
        one_to_right = False
        for p in columns_right_to_left:
            if row[p]:
                one_to_right = True
            elif one_to_right and seen_above[p]:
                successors[n_a + p].append(j)
                indegree[j] += 1
        for p, value in enumerate(row):
            if value:
                seen_above[p] = True

    return ConstraintDigraph(n_a, n_b, successors, indegree)


def _topological_order(h: ConstraintDigraph) -> tuple[list[int], list[int]]:
    """
    Kahn's algorithm with the smallest available node id first.

    Returns:
        (order, remaining indegrees); the order is complete iff h is acyclic.
    """
    indegree = list(h.indegree)
    ready = [node for node in range(h.node_count) if indegree[node] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        node = heapq.heappop(ready)
        order.append(node)
        for target in h.successors[node]:
            indegree[target] -= 1
            if indegree[target] == 0:
                heapq.heappush(ready, target)
    return order, indegree


def _find_cycle(h: ConstraintDigraph, residual: list[bool]) -> list[int]:
    """Iterative DFS over the nodes Kahn's algorithm could not remove."""
    state = [_WHITE] * h.node_count
    for root in range(h.node_count):
        if not residual[root] or state[root] != _WHITE:
            continue
        state[root] = _GRAY
        path = [root]
        pending = [iter(h.successors[root])]
        while path:
            for target in pending[-1]:
                if not residual[target]:
                    continue
                if state[target] == _GRAY:
                    return path[path.index(target):]
                if state[target] == _WHITE:
                    state[target] = _GRAY
                    path.append(target)
                    pending.append(iter(h.successors[target]))
                    break
            else:
                state[path.pop()] = _BLACK
                pending.pop()
    # Unreachable for a residual left by Kahn's algorithm
    return []


def _rotate_to_rightmost_b(
    cycle: list[Vertex], sigma_b: Ordering
) -> tuple[Vertex, ...]:
    pos_b = sigma_b.positions()
    b_steps = [step for step, vertex in enumerate(cycle) if not vertex.is_a]
    if not b_steps:
        return tuple(cycle)
    start = max(b_steps, key=lambda step: pos_b[cycle[step].index])
    return tuple(cycle[start:] + cycle[:start])


def solve_fixed_ab(
    g: BipartiteGraph, sigma_a: Ordering, sigma_b: Ordering
) -> FixedOrderResult:
    """
    Decides whether g has a representation with the given side orders.

    Returns:
        FixedOrderResult: accepted with the topological order of H as sigma
        and its canonical representation, or rejected with a cycle of H.

    Raises:
        DimensionMismatchError: If the orders do not match g.
        ConstructionDefectError: If the topological order fails validation.
    """
    h = build_constraint_digraph(g, sigma_a, sigma_b)
    order, indegree = _topological_order(h)

    if len(order) < h.node_count:
        residual = [value > 0 for value in indegree]
        cycle = [h.vertex(node) for node in _find_cycle(h, residual)]
        cycle = _rotate_to_rightmost_b(cycle, sigma_b)
        logger.debug(
            "solve_fixed_ab rejects %s: cycle %s",
            g,
            LIST_SEPARATOR.join(map(str, cycle)),
        )
        return FixedOrderResult(False, h, cycle=cycle)

    sigma = GroundSequence(g.n_a, g.n_b, tuple(h.vertex(node) for node in order))
    verdict = is_valid_sequence(g, sigma)
    if not verdict:
        raise ConstructionDefectError(
            ERR_CONSTRUCTION_DEFECT.format(
                construction="solve_fixed_ab", sigma=sigma, detail=verdict
            )
        )
    return FixedOrderResult(True, h, sigma, canonical_representation(g, sigma))


def extract_pattern_from_cycle(
    h: ConstraintDigraph,
    cycle: tuple[Vertex, ...] | list[Vertex],
    g: BipartiteGraph,
    sigma_a: Ordering,
    sigma_b: Ordering,
) -> PatternOccurrence:
    """
    Turns a cycle of H into a forbidden ordered submatrix.

    Let b_q be the cycle's rightmost B-vertex in sigma_B. Its successor on
    the cycle is some a_j reached by a corner edge; the cycle continues
    through a run a_j..a_k of A-vertices and leaves it by an edge
    a_k -> b_p. The corner edge provides a row i above j with a 1 in column
    q and a column r right of q with a 1 in row j. Then p = q gives P2 on
    rows (i, j, k) and columns (q, r), k = j gives P3 on rows (i, j) and
    columns (p, q, r), and otherwise P1 on rows (i, j, k), columns (p, q, r).

    Raises:
        ValidationError: If cycle is not a cycle of h or h does not match g.
        ConstructionDefectError: If the extracted entries do not match M.
    """
    ensure_size_matches("Constraint digraph", (h.n_a, h.n_b), g.shape)
    ensure_orders_fit(g, sigma_a, sigma_b)
    cycle = list(cycle)
    shown = LIST_SEPARATOR.join(map(str, cycle))
    for source, target in zip(cycle, cycle[1:] + cycle[:1]):
        if not h.has_edge(source, target):
            raise ValidationError(ERR_NOT_A_CYCLE.format(source=source, target=target))
    if all(vertex.is_a for vertex in cycle):
        raise ValidationError(ERR_CYCLE_NO_B.format(cycle=shown))

    pos_a = sigma_a.positions()
    pos_b = sigma_b.positions()
    length = len(cycle)
    start = max(
        (step for step, vertex in enumerate(cycle) if not vertex.is_a),
        key=lambda step: pos_b[cycle[step].index],
    )
    q = cycle[start].index

    step = (start + 1) % length
    if not cycle[step].is_a:
        raise ValidationError(ERR_CYCLE_SHAPE.format(cycle=shown))
    j = cycle[step].index
    k = j
    step = (step + 1) % length
    while cycle[step].is_a:
        k = cycle[step].index
        step = (step + 1) % length
    p = cycle[step].index

    above = [row for row in sigma_a.perm[: pos_a[j]] if g.matrix[row][q]]
    right = [col for col in sigma_b.perm[pos_b[q] + 1:] if g.matrix[j][col]]
    if not above or not right or g.matrix[j][q] or not g.matrix[k][p]:
        raise ValidationError(ERR_CYCLE_SHAPE.format(cycle=shown))
    i, r = above[0], right[0]

    if p == q:
        occurrence = PatternOccurrence(PatternKind.P2, (i, j, k), (q, r))
    elif k == j:
        occurrence = PatternOccurrence(PatternKind.P3, (i, j), (p, q, r))
    else:
        occurrence = PatternOccurrence(PatternKind.P1, (i, j, k), (p, q, r))

    if not occurrence.holds_in(g) or not occurrence.respects(sigma_a, sigma_b):
        raise ConstructionDefectError(
            ERR_CONSTRUCTION_DEFECT.format(
                construction="extract_pattern_from_cycle",
                sigma=shown,
                detail=occurrence,
            )
        )
    return occurrence


if __name__ == "__main__":
    # TESTS

    test_graph = BipartiteGraph.from_rows(["010", "001", "100"])
    test_identity = Ordering.identity(3)
    test_result = solve_fixed_ab(test_graph, test_identity, test_identity)
    assert not test_result
    assert test_result.cycle == (Vertex.b(1), Vertex.a(1), Vertex.a(2), Vertex.b(0))
    test_pattern = extract_pattern_from_cycle(
        test_result.digraph, test_result.cycle, test_graph, test_identity, test_identity
    )
    assert str(test_pattern) == "P1 rows=a1,a2,a3 cols=b1,b2,b3"

    test_result = solve_fixed_ab(test_graph, test_identity, Ordering((1, 0, 2)))
    assert test_result and is_valid_sequence(test_graph, test_result.sequence)

    test_complete = BipartiteGraph.from_rows(["11", "11"])
    test_result = solve_fixed_ab(test_complete, Ordering.identity(2), Ordering.identity(2))
    assert str(test_result.sequence) == "a1,a2,b1,b2"

    print("Fixed-orders solver tests passed.")
