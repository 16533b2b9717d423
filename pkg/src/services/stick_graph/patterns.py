"""
Forbidden-submatrix detection.

Three ordered patterns P1, P2, P3 characterize when a representation with
fixed orders exists. The same patterns under free role assignment give the
order-independent obstruction, whose completions form the labeled family
of 40 templates. Two more obstructions live here: the 4x2 matrix that
blocks some order of A, and K4,4 minus a perfect matching, which is not a
Stick graph at all.

Nothing in this module depends on the digraph solver, so it can serve as an
independent check of it.
"""

from dataclasses import dataclass
from itertools import combinations, product

from services.stick_graph.core import (
    PATTERN_SHAPES,
    PATTERN_TEMPLATES,
    BipartiteGraph,
    Ordering,
    PatternKind,
    PatternOccurrence,
    Vertex,
    ensure_orders_fit,
)
from utils.constants import LIST_SEPARATOR

# Most specific kind first; P2 and P3 are degenerations of P1
_KIND_ORDER = (PatternKind.P2, PatternKind.P3, PatternKind.P1)


@dataclass(frozen=True)
class HTemplate:
    """
    One labeled member of the universal obstruction family.

    The template entries of its pattern are mandatory; every other cell of
    the pattern's shape is a free pair resolved to an edge or a non-edge.

    Attributes:
        kind (PatternKind): The pattern the member is derived from.
        edges (frozenset[tuple[int, int]]): (row role, column role) cells equal to 1.
        non_edges (frozenset[tuple[int, int]]): cells equal to 0.
        free_pairs (tuple[tuple[int, int], ...]): cells outside the pattern template.
    """

    kind: PatternKind
    edges: frozenset[tuple[int, int]]
    non_edges: frozenset[tuple[int, int]]
    free_pairs: tuple[tuple[int, int], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return PATTERN_SHAPES[self.kind]

    def mandatory_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (row, col) for row, col, value in PATTERN_TEMPLATES[self.kind] if value
        )

    def mandatory_non_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (row, col) for row, col, value in PATTERN_TEMPLATES[self.kind] if not value
        )

    def graph(self) -> BipartiteGraph:
        rows, cols = self.shape
        return BipartiteGraph.from_edges(rows, cols, self.edges)

    def __str__(self):
        return f"{self.kind.value} {self.graph()}"


@dataclass(frozen=True)
class FixedAObstruction:
    """Rows i1 < i2 < i3 < i4 in sigma_A and columns (c, d) of the 4x2 obstruction."""

    rows: tuple[int, int, int, int]
    cols: tuple[int, int]

    def __str__(self):
        rows = LIST_SEPARATOR.join(str(Vertex.a(i)) for i in self.rows)
        cols = LIST_SEPARATOR.join(str(Vertex.b(p)) for p in self.cols)
        return f"rows={rows} cols={cols}"


def _line_extremes(lines) -> tuple[list[int | None], list[int | None]]:
    firsts, lasts = [], []
    for line in lines:
        ones = [index for index, value in enumerate(line) if value]
        firsts.append(ones[0] if ones else None)
        lasts.append(ones[-1] if ones else None)
    return firsts, lasts


def _find_in_arranged(m: BipartiteGraph) -> PatternOccurrence | None:
    """Ordered scan on a matrix whose rows and columns are already in order."""
    n_rows, n_cols = m.shape
    col_first, col_last = _line_extremes(m.columns)
    row_first, row_last = _line_extremes(m.matrix)

    def first_one_right(j: int, q: int) -> int:
        return next(col for col in range(q + 1, n_cols) if m.matrix[j][col])

    # P2: a 0 strictly between two 1s of a column, its row has a 1 to the right
    for q in range(n_cols):
        if col_first[q] is None:
            continue
        for j in range(col_first[q] + 1, col_last[q]):
            if not m.matrix[j][q] and row_last[j] is not None and row_last[j] > q:
                return PatternOccurrence(
                    PatternKind.P2,
                    (col_first[q], j, col_last[q]),
                    (q, first_one_right(j, q)),
                )

    # P3: a 0 below a 1 of its column, with 1s left and right of it in its row
    for j in range(n_rows):
        if row_first[j] is None:
            continue
        for q in range(row_first[j] + 1, row_last[j]):
            if not m.matrix[j][q] and col_first[q] is not None and col_first[q] < j:
                return PatternOccurrence(
                    PatternKind.P3,
                    (col_first[q], j),
                    (row_first[j], q, first_one_right(j, q)),
                )

    # P1: as P3 but the left 1 sits in a later row k of an earlier column p;
    # deepest_left[q] is the column p < q whose last 1 is lowest
    deepest_left: list[int | None] = []
    best = None
    for q in range(n_cols):
        deepest_left.append(best)
        if col_last[q] is not None and (best is None or col_last[q] > col_last[best]):
            best = q
    for j in range(n_rows):
        if row_last[j] is None:
            continue
        for q in range(row_last[j]):
            p = deepest_left[q]
            if (
                not m.matrix[j][q]
                and col_first[q] is not None
                and col_first[q] < j
                and p is not None
                and col_last[p] > j
            ):
                return PatternOccurrence(
                    PatternKind.P1,
                    (col_first[q], j, col_last[p]),
                    (p, q, first_one_right(j, q)),
                )
    return None


def find_ordered_pattern(
    g: BipartiteGraph, sigma_a: Ordering, sigma_b: Ordering
) -> PatternOccurrence | None:
    """
    Finds P1, P2 or P3 in the matrix with rows in sigma_A and columns in
    sigma_B order; P2 and P3 are reported before P1.

    Each kind is found in O(n_a * n_b) from the first and last 1 of every
    row and column.

    Raises:
        DimensionMismatchError: If the orders do not match g.
    """
    ensure_orders_fit(g, sigma_a, sigma_b)
    found = _find_in_arranged(g.permuted(sigma_a.perm, sigma_b.perm))
    if found is None:
        return None
    return PatternOccurrence(
        found.kind,
        tuple(sigma_a[row] for row in found.rows),
        tuple(sigma_b[col] for col in found.cols),
    )


def _universal_p2(g: BipartiteGraph) -> PatternOccurrence | None:
    for q, column in enumerate(g.columns):
        ones = [i for i, value in enumerate(column) if value]
        if len(ones) < 2:
            continue
        for j, value in enumerate(column):
            if value:
                continue
            r = next((col for col, entry in enumerate(g.matrix[j]) if entry), None)
            if r is not None:
                return PatternOccurrence(PatternKind.P2, (ones[0], j, ones[1]), (q, r))
    return None


def _universal_p3(g: BipartiteGraph) -> PatternOccurrence | None:
    for j, row in enumerate(g.matrix):
        ones = [p for p, value in enumerate(row) if value]
        if len(ones) < 2:
            continue
        for q, value in enumerate(row):
            if value:
                continue
            i = next((other for other, entry in enumerate(g.column(q)) if entry), None)
            if i is not None:
                return PatternOccurrence(PatternKind.P3, (i, j), (ones[0], q, ones[1]))
    return None


def _universal_p1(g: BipartiteGraph) -> PatternOccurrence | None:
    for j, row in enumerate(g.matrix):
        for q, value in enumerate(row):
            if value:
                continue
            for i in (other for other, entry in enumerate(g.column(q)) if entry):
                for r in (col for col, entry in enumerate(row) if entry):
                    for k, p in g.edges():
                        if k not in (i, j) and p not in (q, r):
                            return PatternOccurrence(
                                PatternKind.P1, (i, j, k), (p, q, r)
                            )
    return None


def find_universal_obstruction(g: BipartiteGraph) -> PatternOccurrence | None:
    """
    Finds P1, P2 or P3 under some assignment of distinct rows and columns
    to the roles, regardless of order.

    None means every pair of orders admits a representation. P2 and P3 take
    O(n_a * n_b) each; P1 is a plain role enumeration with early exit.
    """
    for finder in (_universal_p2, _universal_p3, _universal_p1):
        found = finder(g)
        if found is not None:
            return found
    return None


def enumerate_h_family() -> list[HTemplate]:
    """
    All 40 labeled completions: 4 from P2, 4 from P3, 32 from P1.

    Within a kind, completions are listed with the free pairs counted in
    binary, all non-edges first.
    """
    family = []
    for kind in _KIND_ORDER:
        n_rows, n_cols = PATTERN_SHAPES[kind]
        fixed = {(row, col): value for row, col, value in PATTERN_TEMPLATES[kind]}
        free = tuple(
            cell for cell in product(range(n_rows), range(n_cols)) if cell not in fixed
        )
        for choice in product((False, True), repeat=len(free)):
            cells = dict(fixed)
            cells.update(zip(free, choice))
            family.append(
                HTemplate(
                    kind,
                    frozenset(cell for cell, value in cells.items() if value),
                    frozenset(cell for cell, value in cells.items() if not value),
                    free,
                )
            )
    return family


def classify_h_member(g: BipartiteGraph, occurrence: PatternOccurrence) -> HTemplate:
    """Template of the family equal to the submatrix the occurrence induces."""
    submatrix = g.permuted(occurrence.rows, occurrence.cols)
    return next(
        template
        for template in enumerate_h_family()
        if template.kind is occurrence.kind and template.graph() == submatrix
    )


def find_h_member(g: BipartiteGraph) -> tuple[HTemplate, PatternOccurrence] | None:
    occurrence = find_universal_obstruction(g)
    if occurrence is None:
        return None
    return classify_h_member(g, occurrence), occurrence


# Row predicates of the 4x2 obstruction over (entry in c, entry in d)
_FIXED_A_STAGES = (
    lambda c, d: c,
    lambda c, d: not c and d,
    lambda c, d: c and not d,
    lambda c, d: d,
)


def find_fixed_a_obstruction(
    g: BipartiteGraph, sigma_a: Ordering
) -> FixedAObstruction | None:
    """
    Finds rows i1 < i2 < i3 < i4 in sigma_A and columns c, d reading
    column c = 1,0,1,* and column d = *,1,0,1.

    For each ordered column pair the rows are matched greedily, each stage
    taking the earliest row that fits, in O(n_a * n_b^2) overall.

    Raises:
        DimensionMismatchError: If sigma_a does not match g.
    """
    ensure_orders_fit(g, sigma_a)
    if g.n_a < len(_FIXED_A_STAGES):
        return None
    for c in range(g.n_b):
        for d in range(g.n_b):
            if c == d:
                continue
            matched = []
            for row in sigma_a:
                stage = _FIXED_A_STAGES[len(matched)]
                if stage(g.matrix[row][c], g.matrix[row][d]):
                    matched.append(row)
                    if len(matched) == len(_FIXED_A_STAGES):
                        return FixedAObstruction(tuple(matched), (c, d))
    return None


def contains_k44_minus_pm(
    g: BipartiteGraph,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """
    Finds 4 A-vertices and 4 B-vertices inducing K4,4 minus a perfect matching.

    For every 4-subset of rows, a column qualifies when it has exactly one
    0 among those rows; a 0 in each of the four rows completes the
    obstruction. cols[t] is the column whose 0 lies in rows[t].
    O(C(n_a, 4) * n_b).
    """
    for rows in combinations(range(g.n_a), 4):
        missing_at: dict[int, int] = {}
        for p, column in enumerate(g.columns):
            zeros = [row for row in rows if not column[row]]
            if len(zeros) == 1:
                missing_at.setdefault(zeros[0], p)
        if len(missing_at) == 4:
            return rows, tuple(missing_at[row] for row in rows)
    return None


if __name__ == "__main__":
    # TESTS

    test_identity = Ordering.identity(3)
    test_perm = BipartiteGraph.from_rows(["010", "001", "100"])
    assert str(find_ordered_pattern(test_perm, test_identity, test_identity)) == (
        "P1 rows=a1,a2,a3 cols=b1,b2,b3"
    )
    assert find_ordered_pattern(test_perm, test_identity, Ordering((1, 0, 2))) is None

    test_k44 = BipartiteGraph.from_rows(["0111", "1011", "1101", "1110"])
    assert str(find_universal_obstruction(test_k44)) == "P2 rows=a2,a1,a3 cols=b1,b2"
    assert contains_k44_minus_pm(test_k44) == ((0, 1, 2, 3), (0, 1, 2, 3))

    test_family = enumerate_h_family()
    assert len(test_family) == 40
    assert sum(1 for template in test_family if template.kind is PatternKind.P1) == 32

    test_remark_b = BipartiteGraph.from_rows(["10", "01", "10", "01"])
    assert str(find_fixed_a_obstruction(test_remark_b, Ordering.identity(4))) == (
        "rows=a1,a2,a3,a4 cols=b1,b2"
    )

    print("Pattern tests passed.")
