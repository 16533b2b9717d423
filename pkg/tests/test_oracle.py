from itertools import permutations

import pytest
from hypothesis import given, settings

from services.stick_graph.core import BipartiteGraph, GroundSequence, Ordering, Vertex
from services.stick_graph.oracle import (
    brute_force_fixed_a,
    brute_force_fixed_ab,
    brute_force_stick,
    canonical_representation,
    is_valid_sequence,
)
from strategies import graphs, orderings
from validators.errors import BoundExceededError, DimensionMismatchError

PERM_CYCLE = BipartiteGraph.from_rows(["010", "001", "100"])
K44_MINUS_PM = BipartiteGraph.from_rows(["0111", "1011", "1101", "1110"])
C6 = BipartiteGraph.from_rows(["110", "011", "101"])


def _sigma(g, text):
    sides = [token[0] for token in text.split(",")]
    indices = [int(token[1:]) - 1 for token in text.split(",")]
    return GroundSequence(
        g.n_a,
        g.n_b,
        tuple(Vertex.a(i) if side == "a" else Vertex.b(i) for side, i in zip(sides, indices)),
    )


def _first_valid_by_enumeration(g):
    for perm in permutations(g.vertices()):
        sigma = GroundSequence(g.n_a, g.n_b, perm)
        if is_valid_sequence(g, sigma):
            return sigma
    return None


def test_single_edge_needs_a_first():
    g = BipartiteGraph.from_rows(["1"])
    assert is_valid_sequence(g, _sigma(g, "a1,b1"))
    verdict = is_valid_sequence(g, _sigma(g, "b1,a1"))
    assert not verdict
    assert verdict.witness_is_edge
    assert str(verdict) == "invalid: edge a1-b1 has b1 before a1"


def test_edgeless_graph_accepts_every_sequence():
    g = BipartiteGraph.from_rows(["0"])
    assert is_valid_sequence(g, _sigma(g, "a1,b1"))
    assert is_valid_sequence(g, _sigma(g, "b1,a1"))


def test_crossed_non_edge_is_reported():
    verdict = is_valid_sequence(PERM_CYCLE, _sigma(PERM_CYCLE, "a1,a2,a3,b1,b2,b3"))
    assert not verdict
    assert verdict.witness == (Vertex.a(1), Vertex.b(1))
    assert verdict.witness_is_edge is False
    assert str(verdict) == "invalid: non-edge a2-b2 would be crossed"


def test_canonical_lengths_reach_extreme_neighbors():
    rep = canonical_representation(PERM_CYCLE, _sigma(PERM_CYCLE, "a1,a2,a3,b1,b2,b3"))
    # a2 reaches b3 in slot 6; b1 reaches down to a3 in slot 3
    assert rep.length_a == (4, 4, 1)
    assert rep.length_b == (1, 4, 4)
    assert rep.touch_b[2] == 6


def test_sequence_must_match_graph():
    with pytest.raises(DimensionMismatchError):
        is_valid_sequence(C6, GroundSequence(1, 1, (Vertex.a(0), Vertex.b(0))))


def test_brute_force_rejects_k44_minus_matching():
    assert brute_force_stick(K44_MINUS_PM) is None


def test_brute_force_finds_sequence_for_six_cycle():
    sigma = brute_force_stick(C6)
    assert sigma is not None and is_valid_sequence(C6, sigma)


def test_brute_force_bound():
    with pytest.raises(BoundExceededError) as info:
        brute_force_stick(K44_MINUS_PM, bound=7)
    assert info.value.size == 8 and info.value.bound == 7


def test_parallel_search_gives_sequential_answer():
    assert brute_force_stick(C6, jobs=2) == brute_force_stick(C6, jobs=1)


def test_fixed_orders_search():
    identity = Ordering.identity(3)
    assert brute_force_fixed_ab(PERM_CYCLE, identity, identity) is None
    found = brute_force_fixed_ab(PERM_CYCLE, identity, Ordering((1, 0, 2)))
    assert found is not None and is_valid_sequence(PERM_CYCLE, found)
    with pytest.raises(BoundExceededError):
        brute_force_fixed_ab(PERM_CYCLE, identity, identity, bound=19)


def test_fixed_a_search_returns_matching_pair():
    found = brute_force_fixed_a(PERM_CYCLE, Ordering.identity(3))
    assert found is not None
    sigma_b, sigma = found
    assert tuple(vertex.index for vertex in sigma if not vertex.is_a) == sigma_b.perm
    assert is_valid_sequence(PERM_CYCLE, sigma)


@settings(max_examples=80)
@given(graphs(max_a=3, max_b=3))
def test_prefix_search_matches_plain_enumeration(g):
    assert brute_force_stick(g) == _first_valid_by_enumeration(g)


@given(graphs(max_a=3, max_b=3).flatmap(
    lambda g: orderings(g.n_a).flatmap(
        lambda a: orderings(g.n_b).map(lambda b: (g, a, b))
    )
))
def test_fixed_orders_search_respects_orders(case):
    g, sigma_a, sigma_b = case
    found = brute_force_fixed_ab(g, sigma_a, sigma_b)
    if found is not None:
        assert is_valid_sequence(g, found)
        assert [v.index for v in found if v.is_a] == list(sigma_a)
        assert [v.index for v in found if not v.is_a] == list(sigma_b)
