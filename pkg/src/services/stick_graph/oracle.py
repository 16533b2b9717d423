"""
Ground-truth recognizers used to cross-check every other solver.

A ground sequence sigma determines its representation completely: each
horizontal segment reaches the slot of its last neighbor, each vertical
segment the slot of its first neighbor. is_valid_sequence decides whether
that drawing realizes exactly the edge set; the brute-force searches look
for such a sigma, in lexicographic order, over all sequences, over all
interleavings of two fixed side orders, or over all orders of B.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import compress, permutations, repeat
from math import comb, factorial

from config import (
    BRUTE_FORCE_VERTEX_BOUND,
    FIXED_A_SEARCH_BOUND,
    INTERLEAVING_BOUND,
    PARALLEL_JOBS,
)
from services.stick_graph.core import (
    BipartiteGraph,
    GroundSequence,
    Ordering,
    StickRepresentation,
    Vertex,
    ensure_orders_fit,
)
from utils.constants import (
    MSG_INVALID,
    MSG_VALID,
    MSG_WITNESS_EDGE,
    MSG_WITNESS_NON_EDGE,
)
from validators.graph_validators import ensure_within_bound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SequenceVerdict:
    """
    Outcome of is_valid_sequence.

    Attributes:
        valid (bool): True when the canonical drawing realizes exactly E.
        witness (tuple[Vertex, Vertex] | None): First violating (a, b) pair.
        witness_is_edge (bool | None): True for an edge with b before a,
            False for a non-edge that the drawing would cross.
    """

    valid: bool
    witness: tuple[Vertex, Vertex] | None = None
    witness_is_edge: bool | None = None

    def __bool__(self):
        return self.valid

    def __str__(self):
        if self.valid:
            return MSG_VALID
        a, b = self.witness
        template = MSG_WITNESS_EDGE if self.witness_is_edge else MSG_WITNESS_NON_EDGE
        return f"{MSG_INVALID}: {template.format(a=a, b=b)}"


def _last_neighbor_positions(g: BipartiteGraph, pos_b: list[int]) -> list[int]:
    # -1 marks an A-vertex without neighbors
    return [max(compress(pos_b, row), default=-1) for row in g.matrix]


def _first_neighbor_positions(g: BipartiteGraph, pos_a: list[int]) -> list[int | None]:
    return [min(compress(pos_a, column), default=None) for column in g.columns]


def canonical_representation(
    g: BipartiteGraph, sigma: GroundSequence
) -> StickRepresentation:
    """
    Extends every segment as far as its extreme neighbor in sigma.

    a reaches the slot of max_B(a), b reaches the slot of min_A(b); a vertex
    whose extreme neighbor lies on the wrong side, or that has no neighbors,
    gets length 0. No validity check is made here.

    Raises:
        DimensionMismatchError: If sigma does not cover g's vertices.
    """
    sigma.ensure_fits(g)
    pos_a, pos_b = sigma.positions()

    last_b = _last_neighbor_positions(g, pos_b)
    length_a = tuple(
        max(0, last - pos_a[i]) if last >= 0 else 0 for i, last in enumerate(last_b)
    )

    first_a = _first_neighbor_positions(g, pos_a)
    length_b = tuple(
        max(0, pos_b[p] - first) if first is not None else 0
        for p, first in enumerate(first_a)
    )
    return StickRepresentation(sigma, length_a, length_b)


def is_valid_sequence(g: BipartiteGraph, sigma: GroundSequence) -> SequenceVerdict:
    """
    Decides whether sigma's canonical drawing realizes exactly g's edges.

    Valid iff every edge (a, b) has a before b, and no non-edge (a_j, b_p)
    has a_j < b_p < max_B(a_j) together with min_A(b_p) < a_j. Rows are
    scanned in sigma order of A, columns in sigma order of B; the first
    violating pair is reported. Runs in O(n_a * n_b).

    Raises:
        DimensionMismatchError: If sigma does not cover g's vertices.
    """
    sigma.ensure_fits(g)
    pos_a, pos_b = sigma.positions()
    last_b = _last_neighbor_positions(g, pos_b)
    first_a = _first_neighbor_positions(g, pos_a)

    order_a = [vertex.index for vertex in sigma if vertex.is_a]
    order_b = [vertex.index for vertex in sigma if not vertex.is_a]

    for i in order_a:
        row = g.matrix[i]
        here = pos_a[i]
        last = last_b[i]
        for p in order_b:
            there = pos_b[p]
            if row[p]:
                if there < here:
                    return SequenceVerdict(False, (Vertex.a(i), Vertex.b(p)), True)
            elif here < there < last:
                first = first_a[p]
                if first is not None and first < here:
                    return SequenceVerdict(False, (Vertex.a(i), Vertex.b(p)), False)
    return SequenceVerdict(True)


class _PrefixSearch:
    """
    Depth-first search over ground sequences, one vertex appended at a time.

    A prefix is abandoned as soon as no completion can be valid: a B-vertex
    may only be placed after all its neighbors, and never after a placed
    non-neighbor a_j that sits behind min_A(b) while a_j still waits for a
    neighbor. Candidates are tried in vertex order, so the first complete
    sequence is the lexicographically first valid one.
    """

    def __init__(
        self,
        g: BipartiteGraph,
        sigma_a: Ordering | None = None,
        sigma_b: Ordering | None = None,
    ):
        self.g = g
        self.sigma_a = sigma_a
        self.sigma_b = sigma_b
        self.b_neighbors = [g.neighbors_of_b(p) for p in range(g.n_b)]
        self.position_a: list[int | None] = [None] * g.n_a
        self.placed_b = [False] * g.n_b
        self.waiting = [g.degree_a(i) for i in range(g.n_a)]
        self.prefix: list[Vertex] = []
        self.placed_a_count = 0
        self.placed_b_count = 0

    @property
    def total(self) -> int:
        return self.g.n_a + self.g.n_b

    def candidates(self) -> list[Vertex]:
        if self.sigma_a is None:
            return [
                *(Vertex.a(i) for i, pos in enumerate(self.position_a) if pos is None),
                *(Vertex.b(p) for p, placed in enumerate(self.placed_b) if not placed),
            ]
        # Fixed side orders: only the next vertex of each side may follow
        options = []
        if self.placed_a_count < self.g.n_a:
            options.append(Vertex.a(self.sigma_a[self.placed_a_count]))
        if self.placed_b_count < self.g.n_b:
            options.append(Vertex.b(self.sigma_b[self.placed_b_count]))
        return options

    def can_place(self, vertex: Vertex) -> bool:
        if vertex.is_a:
            return True
        p = vertex.index
        neighbors = self.b_neighbors[p]
        if any(self.position_a[i] is None for i in neighbors):
            return False
        if not neighbors:
            return True
        first = min(self.position_a[i] for i in neighbors)
        for j, pos in enumerate(self.position_a):
            if (
                pos is not None
                and pos > first
                and self.waiting[j] > 0
                and not self.g.matrix[j][p]
            ):
                return False
        return True

    def place(self, vertex: Vertex) -> None:
        if vertex.is_a:
            self.position_a[vertex.index] = len(self.prefix)
            self.placed_a_count += 1
        else:
            self.placed_b[vertex.index] = True
            self.placed_b_count += 1
            for i in self.b_neighbors[vertex.index]:
                self.waiting[i] -= 1
        self.prefix.append(vertex)

    def undo(self) -> None:
        vertex = self.prefix.pop()
        if vertex.is_a:
            self.position_a[vertex.index] = None
            self.placed_a_count -= 1
        else:
            self.placed_b[vertex.index] = False
            self.placed_b_count -= 1
            for i in self.b_neighbors[vertex.index]:
                self.waiting[i] += 1

    def run(self) -> tuple[Vertex, ...] | None:
        """Returns the first valid completion of the current prefix, or None."""
        base = len(self.prefix)
        stack = [iter(self.candidates())]
        while stack:
            if len(self.prefix) == self.total:
                return tuple(self.prefix)
            for vertex in stack[-1]:
                if self.can_place(vertex):
                    self.place(vertex)
                    stack.append(iter(self.candidates()))
                    break
            else:
                stack.pop()
                if len(self.prefix) > base:
                    self.undo()
        return None


def _first_valid_from(g: BipartiteGraph, first: Vertex) -> tuple[Vertex, ...] | None:
    """Worker: lexicographically first valid sequence starting with first."""
    search = _PrefixSearch(g)
    if not search.can_place(first):
        return None
    search.place(first)
    return search.run()


def brute_force_stick(
    g: BipartiteGraph, bound: int | None = None, jobs: int | None = None
) -> GroundSequence | None:
    """
    Lexicographically first valid sequence over all (n_a + n_b)! orders.

    With jobs > 1 every possible first vertex is searched in its own worker
    process and the smallest reported sequence wins, which is the same
    answer the sequential search gives.

    Raises:
        BoundExceededError: If n_a + n_b exceeds the bound.
    """
    bound = BRUTE_FORCE_VERTEX_BOUND if bound is None else bound
    jobs = PARALLEL_JOBS if jobs is None else jobs
    ensure_within_bound("brute_force_stick", g.n_a + g.n_b, bound)
    logger.debug("brute_force_stick on %s with %d job(s)", g, jobs)

    if jobs > 1 and g.n_a + g.n_b > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_first_valid_from, repeat(g), g.vertices()))
        found = [seq for seq in reports if seq is not None]
        seq = min(found) if found else None
    else:
        seq = _PrefixSearch(g).run()

    return GroundSequence(g.n_a, g.n_b, seq) if seq is not None else None


def brute_force_fixed_ab(
    g: BipartiteGraph,
    sigma_a: Ordering,
    sigma_b: Ordering,
    bound: int | None = None,
) -> GroundSequence | None:
    """
    First valid interleaving of sigma_a and sigma_b, or None.

    Interleavings are tried with A before B at every step.

    Raises:
        DimensionMismatchError: If the orders do not match g.
        BoundExceededError: If C(n_a + n_b, n_a) exceeds the bound.
    """
    ensure_orders_fit(g, sigma_a, sigma_b)
    bound = INTERLEAVING_BOUND if bound is None else bound
    ensure_within_bound("brute_force_fixed_ab", comb(g.n_a + g.n_b, g.n_a), bound)

    seq = _PrefixSearch(g, sigma_a, sigma_b).run()
    return GroundSequence(g.n_a, g.n_b, seq) if seq is not None else None


def brute_force_fixed_a(
    g: BipartiteGraph, sigma_a: Ordering, bound: int | None = None
) -> tuple[Ordering, GroundSequence] | None:
    """
    First order of B, in lexicographic order, that admits a valid interleaving.

    Returns:
        (sigma_b, sigma) for the first success, otherwise None.

    Raises:
        DimensionMismatchError: If sigma_a does not match g.
        BoundExceededError: If n_b! * C(n_a + n_b, n_a) exceeds the bound.
    """
    ensure_orders_fit(g, sigma_a)
    bound = FIXED_A_SEARCH_BOUND if bound is None else bound
    size = factorial(g.n_b) * comb(g.n_a + g.n_b, g.n_a)
    ensure_within_bound("brute_force_fixed_a", size, bound)

    for perm in permutations(range(g.n_b)):
        sigma_b = Ordering(perm)
        seq = _PrefixSearch(g, sigma_a, sigma_b).run()
        if seq is not None:
            return sigma_b, GroundSequence(g.n_a, g.n_b, seq)
    return None


if __name__ == "__main__":
    # TESTS

    test_perm = BipartiteGraph.from_rows(["010", "001", "100"])
    test_sigma = GroundSequence.interleave(
        Ordering.identity(3), Ordering.identity(3), "aaabbb"
    )
    test_verdict = is_valid_sequence(test_perm, test_sigma)
    assert not test_verdict
    assert test_verdict.witness == (Vertex.a(1), Vertex.b(1))
    assert str(test_verdict) == "invalid: non-edge a2-b2 would be crossed"

    test_rep = canonical_representation(test_perm, test_sigma)
    assert test_rep.touch_b[2] == 6 and test_rep.length_a[1] == 4

    assert brute_force_fixed_ab(test_perm, Ordering.identity(3), Ordering.identity(3)) is None
    assert brute_force_fixed_ab(test_perm, Ordering.identity(3), Ordering((1, 0, 2)))

    test_k44 = BipartiteGraph.from_rows(["0111", "1011", "1101", "1110"])
    assert brute_force_stick(test_k44) is None

    print("Oracle tests passed.")
