from itertools import permutations

import pytest
from hypothesis import given, settings

from services.stick_graph.core import BipartiteGraph, Ordering, PatternKind
from services.stick_graph.patterns import (
    classify_h_member,
    contains_k44_minus_pm,
    enumerate_h_family,
    find_fixed_a_obstruction,
    find_h_member,
    find_ordered_pattern,
    find_universal_obstruction,
)
from services.stick_graph.stick_ab import solve_fixed_ab
from strategies import all_graphs, graphs, orderings

PERM_CYCLE = BipartiteGraph.from_rows(["010", "001", "100"])
K44_MINUS_PM = BipartiteGraph.from_rows(["0111", "1011", "1101", "1110"])
REMARK_B = BipartiteGraph.from_rows(["10", "01", "10", "01"])


def _all_orders_accepted(g):
    orders_a = [Ordering(perm) for perm in permutations(range(g.n_a))]
    orders_b = [Ordering(perm) for perm in permutations(range(g.n_b))]
    return all(solve_fixed_ab(g, a, b) for a in orders_a for b in orders_b)


def test_ordered_pattern_depends_on_orders():
    identity = Ordering.identity(3)
    found = find_ordered_pattern(PERM_CYCLE, identity, identity)
    assert str(found) == "P1 rows=a1,a2,a3 cols=b1,b2,b3"
    assert find_ordered_pattern(PERM_CYCLE, identity, Ordering((1, 0, 2))) is None


def test_ordered_pattern_is_reported_in_original_indices():
    # P2 in column b2 once columns are listed as b2,b1
    g = BipartiteGraph.from_rows(["01", "10", "01"])
    found = find_ordered_pattern(g, Ordering.identity(3), Ordering((1, 0)))
    assert found.kind is PatternKind.P2
    assert str(found) == "P2 rows=a1,a2,a3 cols=b2,b1"
    assert found.holds_in(g)


def test_universal_obstruction_of_k44_minus_matching():
    found = find_universal_obstruction(K44_MINUS_PM)
    assert str(found) == "P2 rows=a2,a1,a3 cols=b1,b2"
    template = classify_h_member(K44_MINUS_PM, found)
    assert template.kind is PatternKind.P2
    assert template.graph() == K44_MINUS_PM.permuted(found.rows, found.cols)


def test_h_family_has_forty_distinct_members():
    family = enumerate_h_family()
    assert len(family) == 40
    counts = {kind: sum(1 for t in family if t.kind is kind) for kind in PatternKind}
    assert counts == {PatternKind.P1: 32, PatternKind.P2: 4, PatternKind.P3: 4}
    assert len({(t.kind, t.edges) for t in family}) == 40
    for template in family:
        assert template.mandatory_edges() <= template.edges
        assert template.mandatory_non_edges() <= template.non_edges


def test_find_h_member_on_free_graph():
    assert find_h_member(BipartiteGraph.from_rows(["11", "11"])) is None


def test_fixed_a_obstruction():
    found = find_fixed_a_obstruction(REMARK_B, Ordering.identity(4))
    assert str(found) == "rows=a1,a2,a3,a4 cols=b1,b2"
    starred = BipartiteGraph.from_rows(["11", "01", "10", "11"])
    assert find_fixed_a_obstruction(starred, Ordering.identity(4)) is not None
    assert find_fixed_a_obstruction(REMARK_B, Ordering((0, 2, 1, 3))) is None


def test_k44_minus_matching_detection():
    assert contains_k44_minus_pm(K44_MINUS_PM) == ((0, 1, 2, 3), (0, 1, 2, 3))
    shuffled = K44_MINUS_PM.permuted((2, 0, 3, 1), (1, 3, 0, 2))
    rows, cols = contains_k44_minus_pm(shuffled)
    assert all(not shuffled.matrix[i][p] for i, p in zip(rows, cols))
    assert contains_k44_minus_pm(BipartiteGraph.from_rows(["110", "011", "101"])) is None


@settings(max_examples=40)
@given(graphs(max_a=3, max_b=3))
def test_universal_freedom_means_every_order_pair_works(g):
    assert (find_universal_obstruction(g) is None) == _all_orders_accepted(g)


@given(graphs(max_a=5, max_b=5).flatmap(lambda g: orderings(g.n_a).map(lambda a: (g, a))))
def test_fixed_a_obstruction_matches_its_template(case):
    g, sigma_a = case
    found = find_fixed_a_obstruction(g, sigma_a)
    if found is not None:
        c, d = found.cols
        column_c = [g.matrix[i][c] for i in found.rows]
        column_d = [g.matrix[i][d] for i in found.rows]
        assert column_c[:3] == [True, False, True]
        assert column_d[1:] == [True, False, True]
        positions = sigma_a.positions()
        assert [positions[i] for i in found.rows] == sorted(positions[i] for i in found.rows)


@pytest.mark.slow
def test_universal_freedom_exhaustive_up_to_three_by_three():
    for n_a in range(1, 4):
        for n_b in range(1, 4):
            for g in all_graphs(n_a, n_b):
                assert (find_universal_obstruction(g) is None) == _all_orders_accepted(g)
