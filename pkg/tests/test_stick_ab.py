import time
from itertools import permutations

import pytest
from hypothesis import given

from services.stick_graph.core import BipartiteGraph, Ordering, Provenance, Vertex
from services.stick_graph.generator import family, random_bipartite
from services.stick_graph.oracle import brute_force_fixed_ab, is_valid_sequence
from services.stick_graph.patterns import find_ordered_pattern
from services.stick_graph.stick_ab import (
    build_constraint_digraph,
    extract_pattern_from_cycle,
    solve_fixed_ab,
)
from strategies import all_graphs, graphs, orderings
from validators.errors import DimensionMismatchError, ValidationError

PERM_CYCLE = BipartiteGraph.from_rows(["010", "001", "100"])
IDENTITY_3 = Ordering.identity(3)


def graphs_with_orders(max_a=4, max_b=4):
    return graphs(max_a=max_a, max_b=max_b).flatmap(
        lambda g: orderings(g.n_a).flatmap(
            lambda a: orderings(g.n_b).map(lambda b: (g, a, b))
        )
    )


def test_constraint_digraph_edges():
    h = build_constraint_digraph(PERM_CYCLE, IDENTITY_3, IDENTITY_3)
    assert h.count(Provenance.SIGMA_A) == 2
    assert h.count(Provenance.SIGMA_B) == 2
    assert h.count(Provenance.C1) == 3
    assert h.count(Provenance.C2) == 1
    assert h.has_edge(Vertex.b(1), Vertex.a(1))
    assert h.provenance(h.node_id(Vertex.b(1)), h.node_id(Vertex.a(1))) is Provenance.C2


def test_rejection_returns_cycle_from_rightmost_b():
    result = solve_fixed_ab(PERM_CYCLE, IDENTITY_3, IDENTITY_3)
    assert not result
    assert result.cycle == (Vertex.b(1), Vertex.a(1), Vertex.a(2), Vertex.b(0))
    pattern = extract_pattern_from_cycle(
        result.digraph, result.cycle, PERM_CYCLE, IDENTITY_3, IDENTITY_3
    )
    assert str(pattern) == "P1 rows=a1,a2,a3 cols=b1,b2,b3"


def test_acceptance_gives_valid_sequence():
    result = solve_fixed_ab(PERM_CYCLE, IDENTITY_3, Ordering((1, 0, 2)))
    assert result
    assert is_valid_sequence(PERM_CYCLE, result.sequence)
    assert result.representation.sequence == result.sequence


def test_small_instances():
    empty = BipartiteGraph.from_rows(["0"])
    assert str(solve_fixed_ab(empty, Ordering.identity(1), Ordering.identity(1)).sequence) == "a1,b1"
    complete = BipartiteGraph.from_rows(["11", "11"])
    result = solve_fixed_ab(complete, Ordering.identity(2), Ordering.identity(2))
    assert str(result.sequence) == "a1,a2,b1,b2"


def test_orders_must_match_graph():
    with pytest.raises(DimensionMismatchError):
        solve_fixed_ab(PERM_CYCLE, Ordering.identity(2), IDENTITY_3)


def test_extraction_rejects_a_non_cycle():
    h = build_constraint_digraph(PERM_CYCLE, IDENTITY_3, IDENTITY_3)
    with pytest.raises(ValidationError, match="not an edge"):
        extract_pattern_from_cycle(
            h, (Vertex.a(0), Vertex.b(0)), PERM_CYCLE, IDENTITY_3, IDENTITY_3
        )


@given(graphs_with_orders())
def test_solver_agrees_with_search_and_patterns(case):
    g, sigma_a, sigma_b = case
    result = solve_fixed_ab(g, sigma_a, sigma_b)
    found = brute_force_fixed_ab(g, sigma_a, sigma_b)
    pattern = find_ordered_pattern(g, sigma_a, sigma_b)
    assert bool(result) == (found is not None) == (pattern is None)
    if result:
        assert is_valid_sequence(g, result.sequence)
    else:
        extracted = extract_pattern_from_cycle(result.digraph, result.cycle, g, sigma_a, sigma_b)
        assert extracted.holds_in(g)
        assert extracted.respects(sigma_a, sigma_b)


@pytest.mark.slow
def test_exhaustive_three_by_three():
    orders = [Ordering(perm) for perm in permutations(range(3))]
    for g in all_graphs(3, 3):
        for sigma_a in orders:
            for sigma_b in orders:
                accepted = bool(solve_fixed_ab(g, sigma_a, sigma_b))
                assert accepted == (brute_force_fixed_ab(g, sigma_a, sigma_b) is not None)
                assert accepted == (find_ordered_pattern(g, sigma_a, sigma_b) is None)


def _best_time(g, runs=3):
    sigma_a, sigma_b = Ordering.identity(g.n_a), Ordering.identity(g.n_b)
    best = float("inf")
    for _ in range(runs):
        start = time.perf_counter()
        solve_fixed_ab(g, sigma_a, sigma_b)
        best = min(best, time.perf_counter() - start)
    return best


@pytest.mark.slow
@pytest.mark.parametrize(
    "build",
    [
        lambda n: random_bipartite(n, n, 0.5, 2024),
        lambda n: family("complete", (n, n)),
        lambda n: family("staircase", (n, n, 40)),
    ],
    ids=["random-dense", "complete", "staircase"],
)
def test_solve_fixed_ab_scales_linearly(build):
    half, full = _best_time(build(500)), _best_time(build(1000))
    assert full < 2.0
    assert full / half <= 6
