"""
Domain types shared by the stick-graph modules.

A bipartite graph is kept as its adjacency matrix (rows are A-vertices,
columns are B-vertices). A ground sequence is the left-to-right order in
which segments touch the slope -1 ground line; slot k of the sequence is the
point (k, -k). A-segments are horizontal and run rightward from their slot,
B-segments are vertical and run upward from theirs.

Vertices are 0-based internally and printed 1-based ("a1", "b3").
All types are immutable after construction.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from enum import Enum

from utils.constants import (
    ERR_NEGATIVE_LENGTH,
    ERR_VERTEX_DUPLICATE,
    ERR_VERTEX_MISSING,
    ERR_VERTEX_OUT_OF_RANGE,
    LIST_SEPARATOR,
    SIDE_A_PREFIX,
    SIDE_B_PREFIX,
)
from validators.args_validators import validate_argument_type
from validators.errors import ValidationError
from validators.graph_validators import (
    ensure_size_matches,
    validate_dimensions,
    validate_matrix,
    validate_permutation,
)


class Side(str, Enum):
    """Side of the bipartition; A sorts before B."""

    A = SIDE_A_PREFIX
    B = SIDE_B_PREFIX


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class Provenance(str, Enum):
    """Why an edge of the constraint digraph exists."""

    SIGMA_A = "sigma_a"
    SIGMA_B = "sigma_b"
    C1 = "c1"
    C2 = "c2"


class PatternKind(str, Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex reference: side plus 0-based index."""

    side: Side
    index: int

    def __str__(self):
        return f"{self.side.value}{self.index + 1}"

    @classmethod
    def a(cls, index: int) -> "Vertex":
        return cls(Side.A, index)

    @classmethod
    def b(cls, index: int) -> "Vertex":
        return cls(Side.B, index)

    @property
    def is_a(self) -> bool:
        return self.side is Side.A


@dataclass(frozen=True)
class BipartiteGraph:
    """
    Simple bipartite graph given by its n_a x n_b adjacency matrix.

    Attributes:
        n_a (int): Number of A-vertices (rows).
        n_b (int): Number of B-vertices (columns).
        matrix (tuple[tuple[bool, ...], ...]): matrix[i][p] is True iff a_i b_p is an edge.
    """

    n_a: int
    n_b: int
    matrix: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        validate_dimensions(self.n_a, self.n_b)
        validate_matrix(self.matrix, self.n_a, self.n_b)
        # Normalize 0/1 input to an immutable bool grid
        object.__setattr__(
            self,
            "matrix",
            tuple(tuple(bool(value) for value in row) for row in self.matrix),
        )

    def __str__(self):
        rows = "/".join("".join("1" if v else "0" for v in row) for row in self.matrix)
        return f"{self.n_a}x{self.n_b}[{rows}]"

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str]) -> "BipartiteGraph":
        """Builds a graph from 0/1 rows; strings like "101" are accepted."""
        parsed = [
            [int(ch) for ch in row] if isinstance(row, str) else list(row)
            for row in rows
        ]
        n_b = len(parsed[0]) if parsed else 0
        return cls(len(parsed), n_b, tuple(tuple(row) for row in parsed))

    @classmethod
    def from_edges(
        cls, n_a: int, n_b: int, edges: Iterable[tuple[int, int]]
    ) -> "BipartiteGraph":
        """Builds a graph from 0-based (i, p) pairs."""
        validate_dimensions(n_a, n_b)
        grid = [[False] * n_b for _ in range(n_a)]
        for i, p in edges:
            if not (0 <= i < n_a and 0 <= p < n_b):
                raise ValidationError(
                    ERR_VERTEX_OUT_OF_RANGE.format(
                        vertex=f"{Vertex.a(i)}-{Vertex.b(p)}", n_a=n_a, n_b=n_b
                    )
                )
            grid[i][p] = True
        return cls(n_a, n_b, tuple(tuple(row) for row in grid))

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_a, self.n_b

    def has_edge(self, i: int, p: int) -> bool:
        return self.matrix[i][p]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yields 0-based (i, p) pairs in row-major order."""
        for i, row in enumerate(self.matrix):
            for p, value in enumerate(row):
                if value:
                    yield i, p

    def edge_count(self) -> int:
        return sum(sum(row) for row in self.matrix)

    def neighbors_of_a(self, i: int) -> list[int]:
        return [p for p, value in enumerate(self.matrix[i]) if value]

    def neighbors_of_b(self, p: int) -> list[int]:
        return [i for i in range(self.n_a) if self.matrix[i][p]]

    def degree_a(self, i: int) -> int:
        return sum(self.matrix[i])

    def degree_b(self, p: int) -> int:
        return sum(1 for row in self.matrix if row[p])

    def vertices(self) -> list[Vertex]:
        """All vertices in (side, index) order: a1..a_n, b1..b_m."""
        return [Vertex.a(i) for i in range(self.n_a)] + [
            Vertex.b(p) for p in range(self.n_b)
        ]

    def column(self, p: int) -> tuple[bool, ...]:
        return tuple(row[p] for row in self.matrix)

    @cached_property
    def columns(self) -> tuple[tuple[bool, ...], ...]:
        """Columns of the matrix; column p lists the rows adjacent to b_p."""
        return tuple(self.column(p) for p in range(self.n_b))

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.n_b, self.n_a, self.columns)

    def permuted(self, rows: Sequence[int], cols: Sequence[int]) -> "BipartiteGraph":
        """Matrix with rows and columns listed in the given orders."""
        return BipartiteGraph(
            len(rows),
            len(cols),
            tuple(tuple(self.matrix[i][p] for p in cols) for i in rows),
        )


@dataclass(frozen=True)
class Ordering:
    """A linear order of one side, listed as 0-based indices."""

    perm: tuple[int, ...]

    def __post_init__(self):
        validate_argument_type(self.perm, (tuple, list))
        object.__setattr__(self, "perm", tuple(self.perm))
        validate_permutation(self.perm)

    def __len__(self):
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)

    def __getitem__(self, position: int) -> int:
        return self.perm[position]

    def __str__(self):
        return LIST_SEPARATOR.join(str(index + 1) for index in self.perm)

    @classmethod
    def identity(cls, size: int) -> "Ordering":
        return cls(tuple(range(size)))

    def positions(self) -> list[int]:
        """positions()[index] is the rank of index in this order."""
        ranks = [0] * len(self.perm)
        for rank, index in enumerate(self.perm):
            ranks[index] = rank
        return ranks

    def reversed(self) -> "Ordering":
        return Ordering(tuple(reversed(self.perm)))


@dataclass(frozen=True)
class GroundSequence:
    """
    Total order of A and B along the ground line.

    Attributes:
        n_a (int): Number of A-vertices covered.
        n_b (int): Number of B-vertices covered.
        seq (tuple[Vertex, ...]): Vertices in touch order, each exactly once.
    """

    n_a: int
    n_b: int
    seq: tuple[Vertex, ...]

    def __post_init__(self):
        object.__setattr__(self, "seq", tuple(self.seq))
        seen = set()
        for vertex in self.seq:
            limit = self.n_a if vertex.is_a else self.n_b
            if not 0 <= vertex.index < limit:
                raise ValidationError(
                    ERR_VERTEX_OUT_OF_RANGE.format(
                        vertex=vertex, n_a=self.n_a, n_b=self.n_b
                    )
                )
            if vertex in seen:
                raise ValidationError(ERR_VERTEX_DUPLICATE.format(vertex=vertex))
            seen.add(vertex)
        if len(seen) != self.n_a + self.n_b:
            missing = [
                str(vertex)
                for vertex in _all_vertices(self.n_a, self.n_b)
                if vertex not in seen
            ]
            raise ValidationError(
                ERR_VERTEX_MISSING.format(vertices=LIST_SEPARATOR.join(missing))
            )

    def __str__(self):
        return LIST_SEPARATOR.join(str(vertex) for vertex in self.seq)

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    @classmethod
    def interleave(
        cls, sigma_a: Ordering, sigma_b: Ordering, sides: Sequence[Side]
    ) -> "GroundSequence":
        """Merges two side orders following a pattern of sides ("a"/"b" accepted)."""
        next_a = iter(sigma_a)
        next_b = iter(sigma_b)
        seq = [
            Vertex.a(next(next_a)) if Side(side) is Side.A else Vertex.b(next(next_b))
            for side in sides
        ]
        return cls(len(sigma_a), len(sigma_b), tuple(seq))

    def positions(self) -> tuple[list[int], list[int]]:
        """0-based positions of every a_i and every b_p in the sequence."""
        pos_a = [0] * self.n_a
        pos_b = [0] * self.n_b
        for position, vertex in enumerate(self.seq):
            if vertex.is_a:
                pos_a[vertex.index] = position
            else:
                pos_b[vertex.index] = position
        return pos_a, pos_b

    def sides(self) -> tuple[Side, ...]:
        return tuple(vertex.side for vertex in self.seq)

    def ensure_fits(self, g: BipartiteGraph) -> None:
        ensure_size_matches("Ground sequence", (self.n_a, self.n_b), g.shape)


@dataclass(frozen=True)
class StickRepresentation:
    """
    Touch slots and segment lengths for every vertex.

    The k-th element of the sequence occupies slot k (1-based). Segment of
    a_i lies on y = -touch, x in [touch, touch + length]; segment of b_p
    lies on x = touch, y in [-touch, -touch + length].
    """

    sequence: GroundSequence
    length_a: tuple[int, ...]
    length_b: tuple[int, ...]
    touch_a: tuple[int, ...] = field(init=False)
    touch_b: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        ensure_size_matches(
            "Segment lengths",
            (len(self.length_a), len(self.length_b)),
            (self.sequence.n_a, self.sequence.n_b),
        )
        if any(length < 0 for length in (*self.length_a, *self.length_b)):
            raise ValidationError(ERR_NEGATIVE_LENGTH)
        pos_a, pos_b = self.sequence.positions()
        object.__setattr__(self, "touch_a", tuple(pos + 1 for pos in pos_a))
        object.__setattr__(self, "touch_b", tuple(pos + 1 for pos in pos_b))

    @property
    def n_a(self) -> int:
        return self.sequence.n_a

    @property
    def n_b(self) -> int:
        return self.sequence.n_b

    def touch(self, vertex: Vertex) -> int:
        return (self.touch_a if vertex.is_a else self.touch_b)[vertex.index]

    def length(self, vertex: Vertex) -> int:
        return (self.length_a if vertex.is_a else self.length_b)[vertex.index]

    def horizontal_segment(self, i: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Endpoints of a_i's segment in exact integer coordinates."""
        t = self.touch_a[i]
        return (t, -t), (t + self.length_a[i], -t)

    def vertical_segment(self, p: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Endpoints of b_p's segment in exact integer coordinates."""
        t = self.touch_b[p]
        return (t, -t), (t, -t + self.length_b[p])


@dataclass(frozen=True)
class ConstraintDigraph:
    """
    Precedence digraph H on A and B for fixed side orders.

    Node ids: a_i is i, b_p is n_a + p. The provenance of an edge follows
    from its endpoint sides: A->A is SIGMA_A, B->B is SIGMA_B, A->B is C1,
    B->A is C2.
    """

    n_a: int
    n_b: int
    successors: list[list[int]]
    indegree: list[int]

    @property
    def node_count(self) -> int:
        return self.n_a + self.n_b

    def node_id(self, vertex: Vertex) -> int:
        return vertex.index if vertex.is_a else self.n_a + vertex.index

    def vertex(self, node: int) -> Vertex:
        return Vertex.a(node) if node < self.n_a else Vertex.b(node - self.n_a)

    def provenance(self, source: int, target: int) -> Provenance:
        source_is_a = source < self.n_a
        target_is_a = target < self.n_a
        if source_is_a and target_is_a:
            return Provenance.SIGMA_A
        if not source_is_a and not target_is_a:
            return Provenance.SIGMA_B
        return Provenance.C1 if source_is_a else Provenance.C2

    def has_edge(self, source: Vertex, target: Vertex) -> bool:
        return self.node_id(target) in self.successors[self.node_id(source)]

    def edges(self) -> Iterator[tuple[Vertex, Vertex, Provenance]]:
        for source, targets in enumerate(self.successors):
            for target in targets:
                yield self.vertex(source), self.vertex(target), self.provenance(
                    source, target
                )

    def count(self, provenance: Provenance) -> int:
        return sum(
            1
            for source, targets in enumerate(self.successors)
            for target in targets
            if self.provenance(source, target) is provenance
        )


# Template entries per pattern kind as (row role, column role, value).
# Roles are positions within PatternOccurrence.rows / .cols.
PATTERN_TEMPLATES: dict[PatternKind, tuple[tuple[int, int, bool], ...]] = {
    PatternKind.P1: ((0, 1, True), (1, 1, False), (1, 2, True), (2, 0, True)),
    PatternKind.P2: ((0, 0, True), (1, 0, False), (2, 0, True), (1, 1, True)),
    PatternKind.P3: ((0, 1, True), (1, 0, True), (1, 1, False), (1, 2, True)),
}

PATTERN_SHAPES: dict[PatternKind, tuple[int, int]] = {
    PatternKind.P1: (3, 3),
    PatternKind.P2: (3, 2),
    PatternKind.P3: (2, 3),
}


@dataclass(frozen=True)
class PatternOccurrence:
    """
    An occurrence of a forbidden ordered submatrix.

    rows are role-ordered A-indices (i, j[, k]); cols are role-ordered
    B-indices (p, q[, r]). Role order is the order the rows and columns must
    have in sigma_A and sigma_B for the occurrence to obstruct.
    """

    kind: PatternKind
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        ensure_size_matches(
            f"{self.kind.value} occurrence",
            (len(self.rows), len(self.cols)),
            PATTERN_SHAPES[self.kind],
        )

    def __str__(self):
        rows = LIST_SEPARATOR.join(str(Vertex.a(i)) for i in self.rows)
        cols = LIST_SEPARATOR.join(str(Vertex.b(p)) for p in self.cols)
        return f"{self.kind.value} rows={rows} cols={cols}"

    def required_entries(self) -> list[tuple[int, int, bool]]:
        """Template entries as (row index, column index, value) in g."""
        return [
            (self.rows[row_role], self.cols[col_role], value)
            for row_role, col_role, value in PATTERN_TEMPLATES[self.kind]
        ]

    def holds_in(self, g: BipartiteGraph) -> bool:
        """True iff every template entry matches g's matrix."""
        return all(g.matrix[i][p] == value for i, p, value in self.required_entries())

    def respects(self, sigma_a: Ordering, sigma_b: Ordering) -> bool:
        """True iff rows and columns appear in role order in the given orders."""
        pos_a = sigma_a.positions()
        pos_b = sigma_b.positions()
        return _strictly_increasing(pos_a[i] for i in self.rows) and (
            _strictly_increasing(pos_b[p] for p in self.cols)
        )


def induced_orders(sigma: GroundSequence) -> tuple[Ordering, Ordering]:
    """Restriction of a ground sequence to each side."""
    order_a = tuple(vertex.index for vertex in sigma if vertex.is_a)
    order_b = tuple(vertex.index for vertex in sigma if not vertex.is_a)
    return Ordering(order_a), Ordering(order_b)


def ensure_orders_fit(g: BipartiteGraph, sigma_a: Ordering, sigma_b: Ordering | None = None):
    """Raises DimensionMismatchError unless the orders cover g's sides."""
    ensure_size_matches("Ordering of A", (len(sigma_a),), (g.n_a,))
    if sigma_b is not None:
        ensure_size_matches("Ordering of B", (len(sigma_b),), (g.n_b,))


def _all_vertices(n_a: int, n_b: int) -> list[Vertex]:
    return [Vertex.a(i) for i in range(n_a)] + [Vertex.b(p) for p in range(n_b)]


def _strictly_increasing(values: Iterable[int]) -> bool:
    values = list(values)
    return all(left < right for left, right in zip(values, values[1:]))


if __name__ == "__main__":
    # TESTS

    # Restriction of the sequence a1,b1,a2,a3,b2,b3,b4 to each side
    test_sigma = GroundSequence(
        3,
        4,
        (
            Vertex.a(0),
            Vertex.b(0),
            Vertex.a(1),
            Vertex.a(2),
            Vertex.b(1),
            Vertex.b(2),
            Vertex.b(3),
        ),
    )
    test_order_a, test_order_b = induced_orders(test_sigma)
    assert test_order_a.perm == (0, 1, 2)
    assert test_order_b.perm == (0, 1, 2, 3)
    assert str(test_sigma) == "a1,b1,a2,a3,b2,b3,b4"
    assert GroundSequence.interleave(test_order_a, test_order_b, test_sigma.sides()) == test_sigma

    # Restriction keeps relative order
    test_order_a, test_order_b = induced_orders(
        GroundSequence(1, 2, (Vertex.b(1), Vertex.b(0), Vertex.a(0)))
    )
    assert test_order_a.perm == (0,)
    assert test_order_b.perm == (1, 0)

    # A vertex listed twice is rejected
    try:
        GroundSequence(1, 1, (Vertex.a(0), Vertex.a(0)))
    except ValidationError as exc:
        assert str(exc) == "Vertex 'a1' appears more than once in the sequence."
    else:
        assert False, "Should raise Validation error on a repeated vertex"

    # Graph construction and adjacency helpers
    test_graph = BipartiteGraph.from_rows(["010", "001", "100"])
    assert test_graph.shape == (3, 3)
    assert list(test_graph.edges()) == [(0, 1), (1, 2), (2, 0)]
    assert test_graph.neighbors_of_b(0) == [2]
    assert str(test_graph) == "3x3[010/001/100]"

    test_pattern = PatternOccurrence(PatternKind.P1, (0, 1, 2), (0, 1, 2))
    assert test_pattern.holds_in(test_graph)
    assert str(test_pattern) == "P1 rows=a1,a2,a3 cols=b1,b2,b3"

    print("Core tests passed.")
