"""
Satisfiability engines over ordering variables.

One variable stands for an unordered vertex pair {v, w}; its positive
literal means v precedes w for the canonical representative v < w in
(side, index) order, the negative literal means w precedes v.

solve_2sat runs in linear time on the implication graph. solve_sat_small
is a plain complete search with unit propagation and pure-literal
elimination, adequate at desk scale. export_dimacs and parse_dimacs move
formulas to and from external solvers.
"""

import logging
from collections.abc import Iterable, Iterator

from config import SAT_VARIABLE_BOUND
from services.stick_graph.core import Vertex
from utils.constants import (
    DIMACS_COMMENT_PREFIX,
    DIMACS_HEADER_PREFIX,
    ERR_CLAUSE_TOO_WIDE,
    ERR_DIMACS_SYNTAX,
    ERR_ZERO_LITERAL,
)
from validators.errors import ValidationError
from validators.graph_validators import ensure_within_bound

logger = logging.getLogger(__name__)

Assignment = dict[int, bool]


class VariableBook:
    """Maps each unordered vertex pair to a 1-based variable id."""

    def __init__(self):
        self._ids: dict[tuple[Vertex, Vertex], int] = {}
        self._pairs: list[tuple[Vertex, Vertex]] = []

    def __len__(self):
        return len(self._pairs)

    def variable(self, v: Vertex, w: Vertex) -> int:
        key = (v, w) if v < w else (w, v)
        if key not in self._ids:
            self._pairs.append(key)
            self._ids[key] = len(self._pairs)
        return self._ids[key]

    def literal(self, v: Vertex, w: Vertex) -> int:
        """Literal that is true iff v precedes w."""
        var = self.variable(v, w)
        return var if v < w else -var

    def register_all(self, vertices: Iterable[Vertex]) -> None:
        """Allocates every pair of the given vertices in lexicographic order."""
        ordered = sorted(vertices)
        for first, v in enumerate(ordered):
            for w in ordered[first + 1:]:
                self.variable(v, w)

    def pair(self, var: int) -> tuple[Vertex, Vertex]:
        return self._pairs[var - 1]

    def items(self) -> Iterator[tuple[int, tuple[Vertex, Vertex]]]:
        for index, pair in enumerate(self._pairs, start=1):
            yield index, pair

    def precedes(self, assignment: Assignment, v: Vertex, w: Vertex) -> bool:
        lit = self.literal(v, w)
        value = assignment.get(abs(lit), False)
        return value if lit > 0 else not value


class CnfFormula:
    """
    Clause set with duplicate clauses dropped.

    Clauses are stored as tuples of literals sorted by variable, positive
    literal first; tautologies are skipped. The variable count covers every
    literal used and every pair registered in the attached book.
    """

    def __init__(self, book: VariableBook | None = None, num_variables: int = 0):
        self.book = book
        self._declared = num_variables
        self._max_used = 0
        self._clauses: dict[tuple[int, ...], None] = {}

    def __len__(self):
        return len(self._clauses)

    def __iter__(self):
        return iter(self._clauses)

    @property
    def clauses(self) -> list[tuple[int, ...]]:
        return list(self._clauses)

    @property
    def num_variables(self) -> int:
        return max(self._declared, self._max_used, len(self.book) if self.book else 0)

    @property
    def max_width(self) -> int:
        return max((len(clause) for clause in self._clauses), default=0)

    def add_clause(self, literals: Iterable[int]) -> None:
        """
        Adds one clause.

        Raises:
            ValidationError: If a literal is 0.
        """
        literals = set(literals)
        if 0 in literals:
            raise ValidationError(ERR_ZERO_LITERAL)
        if any(-lit in literals for lit in literals):
            return
        clause = tuple(sorted(literals, key=lambda lit: (abs(lit), lit < 0)))
        self._max_used = max(self._max_used, *(abs(lit) for lit in clause), 0)
        self._clauses.setdefault(clause, None)

    def evaluate(self, assignment: Assignment) -> bool:
        """True iff every clause has a true literal; unassigned means False."""
        return all(
            any(assignment.get(abs(lit), False) == (lit > 0) for lit in clause)
            for clause in self._clauses
        )


def _node(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (lit < 0)


def _strongly_connected_components(graph: list[list[int]]) -> list[int]:
    """
    Iterative Tarjan.

    Components are numbered in completion order, which is a reverse
    topological order of the condensation.
    """
    size = len(graph)
    index = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    stack: list[int] = []
    component = [-1] * size
    counter = 0
    components = 0

    for root in range(size):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, edge = work[-1]
            if edge == 0 and index[node] == -1:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True

            targets = graph[node]
            descended = False
            while edge < len(targets):
                target = targets[edge]
                edge += 1
                if index[target] == -1:
                    work[-1] = (node, edge)
                    work.append((target, 0))
                    descended = True
                    break
                if on_stack[target]:
                    low[node] = min(low[node], index[target])
            if descended:
                continue

            work.pop()
            if low[node] == index[node]:
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    component[member] = components
                    if member == node:
                        break
                components += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return component


def solve_2sat(f: CnfFormula) -> Assignment | None:
    """
    Linear-time 2-SAT through the implication graph.

    A unit clause (l) is read as (l or l). Unsatisfiable iff some variable
    shares a strongly connected component with its negation.

    Raises:
        ValidationError: If a clause has more than two literals.
    """
    graph: list[list[int]] = [[] for _ in range(2 * f.num_variables)]
    for clause in f:
        if len(clause) > 2:
            raise ValidationError(
                ERR_CLAUSE_TOO_WIDE.format(clause=clause, width=len(clause))
            )
        if not clause:
            return None
        first, second = clause if len(clause) == 2 else (clause[0], clause[0])
        graph[_node(-first)].append(_node(second))
        graph[_node(-second)].append(_node(first))

    component = _strongly_connected_components(graph)
    assignment = {}
    for var in range(1, f.num_variables + 1):
        positive, negative = component[_node(var)], component[_node(-var)]
        if positive == negative:
            return None
        assignment[var] = positive < negative
    return assignment


def _propagate(
    clauses: list[tuple[int, ...]], assignment: Assignment
) -> tuple[Assignment, list[list[int]]] | None:
    """
    Unit propagation and pure-literal elimination up to a fixpoint.

    Returns:
        (extended assignment, open literals of every unresolved clause),
        or None on a conflict.
    """
    assignment = dict(assignment)
    while True:
        changed = False
        unresolved = []
        for clause in clauses:
            open_literals = []
            for lit in clause:
                value = assignment.get(abs(lit))
                if value is None:
                    open_literals.append(lit)
                elif value == (lit > 0):
                    break
            else:
                if not open_literals:
                    return None
                if len(open_literals) == 1:
                    lit = open_literals[0]
                    assignment[abs(lit)] = lit > 0
                    changed = True
                else:
                    unresolved.append(open_literals)
        if changed:
            continue

        polarity: dict[int, int] = {}
        for open_literals in unresolved:
            for lit in open_literals:
                polarity[abs(lit)] = polarity.get(abs(lit), 0) | (1 if lit > 0 else 2)
        pure = {var: mask == 1 for var, mask in polarity.items() if mask != 3}
        if not pure:
            return assignment, unresolved
        assignment.update(pure)


def solve_sat_small(f: CnfFormula, bound: int | None = None) -> Assignment | None:
    """
    Complete search for general CNF.

    Branches on the lowest unassigned variable, False first; variables left
    open once every clause is satisfied are set to False.

    Raises:
        BoundExceededError: If the variable count exceeds the bound.
    """
    bound = SAT_VARIABLE_BOUND if bound is None else bound
    ensure_within_bound("solve_sat_small", f.num_variables, bound)
    clauses = f.clauses
    logger.debug(
        "solve_sat_small: %d variables, %d clauses", f.num_variables, len(clauses)
    )

    branches: list[Assignment] = [{}]
    explored = 0
    while branches:
        explored += 1
        result = _propagate(clauses, branches.pop())
        if result is None:
            continue
        assignment, unresolved = result
        if not unresolved:
            logger.debug("solve_sat_small: satisfied after %d branches", explored)
            return {
                var: assignment.get(var, False)
                for var in range(1, f.num_variables + 1)
            }
        var = min(abs(lit) for open_literals in unresolved for lit in open_literals)
        branches.append({**assignment, var: True})
        branches.append({**assignment, var: False})

    logger.debug("solve_sat_small: unsatisfiable after %d branches", explored)
    return None


def export_dimacs(f: CnfFormula) -> str:
    """
    DIMACS CNF text with LF line endings.

    A comment line "c <var> <v><<w>" documents each pair variable when the
    formula carries a book.
    """
    lines = []
    if f.book is not None:
        lines.extend(
            f"{DIMACS_COMMENT_PREFIX} {var} {v}<{w}" for var, (v, w) in f.book.items()
        )
    lines.append(f"{DIMACS_HEADER_PREFIX} {f.num_variables} {len(f)}")
    lines.extend(" ".join(map(str, clause + (0,))) for clause in f)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """
    Reads DIMACS CNF; comment lines are skipped and clauses may span lines.

    Raises:
        ValidationError: On a malformed line or a clause before the header.
    """
    formula = None
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.split()[0] == DIMACS_COMMENT_PREFIX:
            continue
        if line.startswith(DIMACS_HEADER_PREFIX):
            parts = line.split()
            if formula is not None or len(parts) != 4 or not parts[2].isdigit():
                raise ValidationError(ERR_DIMACS_SYNTAX.format(lineno=lineno, line=raw))
            formula = CnfFormula(num_variables=int(parts[2]))
            continue
        if formula is None:
            raise ValidationError(ERR_DIMACS_SYNTAX.format(lineno=lineno, line=raw))
        try:
            values = [int(token) for token in line.split()]
        except ValueError:
            raise ValidationError(ERR_DIMACS_SYNTAX.format(lineno=lineno, line=raw))
        for value in values:
            if value == 0:
                formula.add_clause(pending)
                pending = []
            else:
                pending.append(value)
    if formula is None:
        raise ValidationError(ERR_DIMACS_SYNTAX.format(lineno=0, line=""))
    if pending:
        formula.add_clause(pending)
    return formula


if __name__ == "__main__":
    # TESTS

    test_formula = CnfFormula()
    test_formula.add_clause([1, 2])
    test_formula.add_clause([-1, 2])
    test_formula.add_clause([1, -2])
    assert solve_2sat(test_formula) == {1: True, 2: True}
    assert solve_sat_small(test_formula) == {1: True, 2: True}

    test_formula = CnfFormula()
    test_formula.add_clause([1])
    test_formula.add_clause([-1])
    assert solve_2sat(test_formula) is None

    test_formula = CnfFormula()
    test_formula.add_clause([1, 2, 3])
    test_formula.add_clause([-1])
    test_formula.add_clause([-2])
    assert solve_sat_small(test_formula) == {1: False, 2: False, 3: True}

    assert export_dimacs(CnfFormula()) == "p cnf 0 0\n"
    test_formula = CnfFormula()
    test_formula.add_clause([-2, 1])
    assert export_dimacs(test_formula) == "p cnf 2 1\n1 -2 0\n"
    assert parse_dimacs(export_dimacs(test_formula)).clauses == [(1, -2)]

    print("SAT tests passed.")
