from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from services.stick_graph.core import Vertex
from services.stick_graph.generator import SplitMix64
from services.stick_graph.sat import (
    CnfFormula,
    VariableBook,
    export_dimacs,
    parse_dimacs,
    solve_2sat,
    solve_sat_small,
)
from validators.errors import BoundExceededError, ValidationError


def _formula(clauses, num_variables=0):
    formula = CnfFormula(num_variables=num_variables)
    for clause in clauses:
        formula.add_clause(clause)
    return formula


def _satisfiable(formula):
    variables = range(1, formula.num_variables + 1)
    return any(
        formula.evaluate(dict(zip(variables, values)))
        for values in product((False, True), repeat=formula.num_variables)
    )


def cnf(max_vars: int, max_width: int):
    literal = st.integers(1, max_vars).flatmap(lambda v: st.sampled_from((v, -v)))
    return st.lists(st.lists(literal, min_size=1, max_size=max_width), max_size=12)


def test_variable_book_orients_literals():
    book = VariableBook()
    a1, b1 = Vertex.a(0), Vertex.b(0)
    assert book.literal(a1, b1) == 1
    assert book.literal(b1, a1) == -1
    assert book.pair(1) == (a1, b1)
    assert book.precedes({1: False}, b1, a1)
    assert len(book) == 1


def test_clauses_are_normalized_and_deduplicated():
    formula = _formula([[2, -1], [-1, 2], [1, -1]])
    assert formula.clauses == [(-1, 2)]
    assert formula.num_variables == 2
    assert formula.max_width == 2
    with pytest.raises(ValidationError, match="Literal 0"):
        formula.add_clause([0, 1])


def test_two_sat():
    assert solve_2sat(_formula([[1, 2], [-1, 2], [1, -2]])) == {1: True, 2: True}
    assert solve_2sat(_formula([[1], [-1]])) is None
    assert solve_2sat(_formula([], num_variables=2)) is not None
    with pytest.raises(ValidationError, match="width 3"):
        solve_2sat(_formula([[1, 2, 3]]))


def test_small_solver():
    assert solve_sat_small(_formula([[1, 2, 3], [-1], [-2]])) == {1: False, 2: False, 3: True}
    assert solve_sat_small(_formula([[1, 2], [-1, 2], [1, -2], [-1, -2]])) is None
    with pytest.raises(BoundExceededError):
        solve_sat_small(_formula([[1, 2, 3]]), bound=2)


def test_dimacs_export_and_parse():
    assert export_dimacs(CnfFormula()) == "p cnf 0 0\n"
    assert export_dimacs(_formula([[-2, 1]])) == "p cnf 2 1\n1 -2 0\n"

    book = VariableBook()
    formula = CnfFormula(book)
    formula.add_clause([book.literal(Vertex.a(0), Vertex.b(0))])
    assert export_dimacs(formula) == "c 1 a1<b1\np cnf 1 1\n1 0\n"

    parsed = parse_dimacs("c comment\np cnf 3 2\n1 -2\n0 3 0\n")
    assert parsed.clauses == [(1, -2), (3,)]
    assert parsed.num_variables == 3
    with pytest.raises(ValidationError, match="Invalid DIMACS line 1"):
        parse_dimacs("1 2 0\n")


@given(cnf(max_vars=5, max_width=2))
def test_two_sat_matches_truth_tables(clauses):
    formula = _formula(clauses)
    assignment = solve_2sat(formula)
    assert (assignment is not None) == _satisfiable(formula)
    if assignment is not None:
        assert formula.evaluate(assignment)


@given(cnf(max_vars=6, max_width=3))
def test_small_solver_matches_truth_tables(clauses):
    formula = _formula(clauses)
    assignment = solve_sat_small(formula)
    assert (assignment is not None) == _satisfiable(formula)
    if assignment is not None:
        assert formula.evaluate(assignment)


@given(cnf(max_vars=6, max_width=3))
def test_dimacs_round_trip(clauses):
    formula = _formula(clauses)
    parsed = parse_dimacs(export_dimacs(formula))
    assert parsed.clauses == formula.clauses
    assert parsed.num_variables == formula.num_variables


def _random_two_cnf(rng):
    num_variables = 1 + rng.randrange(12)
    clauses = []
    for _ in range(rng.randrange(2 * num_variables + 1)):
        clause = []
        for _ in range(1 + rng.randrange(2)):
            variable = 1 + rng.randrange(num_variables)
            clause.append(variable if rng.randrange(2) else -variable)
        clauses.append(clause)
    return _formula(clauses, num_variables)


@pytest.mark.slow
def test_two_sat_and_small_solver_agree_on_seeded_formulas():
    mismatches = []
    for seed in range(10_000):
        formula = _random_two_cnf(SplitMix64(seed))
        fast, small = solve_2sat(formula), solve_sat_small(formula)
        if (
            (fast is None) != (small is None)
            or (fast is not None and not formula.evaluate(fast))
            or (small is not None and not formula.evaluate(small))
        ):
            mismatches.append((seed, formula.clauses))
    assert mismatches == []
