import pytest
from hypothesis import given, settings

from services.stick_graph import recognize as recognize_module
from services.stick_graph.core import BipartiteGraph, Verdict
from services.stick_graph.generator import family, random_bipartite
from services.stick_graph.oracle import is_valid_sequence
from services.stick_graph.recognize import (
    build_3sat_formula,
    k44_certificate,
    recognize,
    sequence_from_assignment,
)
from services.stick_graph.sat import solve_sat_small
from strategies import all_graphs, graphs
from validators.errors import BoundExceededError, ValidationError

PERM_CYCLE = BipartiteGraph.from_rows(["010", "001", "100"])
K44_MINUS_PM = BipartiteGraph.from_rows(["0111", "1011", "1101", "1110"])
C6 = BipartiteGraph.from_rows(["110", "011", "101"])


def test_k44_minus_matching_is_rejected_with_certificate():
    result = recognize(K44_MINUS_PM)
    assert result.verdict is Verdict.NO
    assert result.certificate == "k44-minus-pm rows=a1,a2,a3,a4 cols=b1,b2,b3,b4"
    assert result.sequence is None


def test_certificate_lists_original_indices():
    assert k44_certificate((3, 0), (1, 2)) == "k44-minus-pm rows=a4,a1 cols=b2,b3"


@pytest.mark.parametrize(
    ("method", "certificate"),
    [("brute", "exhaustive-search"), ("sat3", "3sat-unsatisfiable")],
)
def test_exact_methods_reject_k44_minus_matching(method, certificate):
    result = recognize(K44_MINUS_PM, method)
    assert result.verdict is Verdict.NO
    assert result.certificate == certificate


@pytest.mark.parametrize("method", ["auto", "brute", "sat3"])
def test_six_cycle_is_accepted(method):
    result = recognize(C6, method)
    assert result.verdict is Verdict.YES
    assert is_valid_sequence(C6, result.sequence)
    assert result.representation.sequence == result.sequence


def test_auto_reports_the_deciding_step():
    assert recognize(C6).provenance == "small-a-construction"
    assert recognize(BipartiteGraph.from_rows(["100", "010", "001"])).provenance == (
        "sc1p-construction"
    )
    assert recognize(family("complete", (14, 13))).provenance == "pattern-free-orders"


def test_formula_sizes():
    formula = build_3sat_formula(PERM_CYCLE)
    # 3 edge units, 6 crossing clauses, 2 transitivity clauses per triple
    assert len(formula) == 49
    assert formula.num_variables == 15

    single_edge = build_3sat_formula(BipartiteGraph.from_rows(["1"]))
    assert single_edge.clauses == [(1,)]
    assert single_edge.num_variables == 1


def test_model_gives_valid_sequence():
    formula = build_3sat_formula(C6)
    sequence = sequence_from_assignment(C6, formula, solve_sat_small(formula))
    assert is_valid_sequence(C6, sequence)


def test_unknown_method():
    with pytest.raises(ValidationError, match="Unknown method 'magic'"):
        recognize(C6, "magic")


def test_explicit_methods_honor_bounds():
    with pytest.raises(BoundExceededError):
        recognize(family("complete", (14, 13)), "sat3")
    with pytest.raises(BoundExceededError):
        recognize(family("complete", (6, 5)), "brute")


def test_auto_answers_unknown_past_every_bound(monkeypatch):
    monkeypatch.setattr(recognize_module, "_constructive_steps", lambda g: None)
    monkeypatch.setattr(recognize_module, "SAT3_VERTEX_BOUND", 0)
    monkeypatch.setattr(recognize_module, "BRUTE_FORCE_VERTEX_BOUND", 0)
    result = recognize(C6)
    assert result.verdict is Verdict.UNKNOWN
    assert result.sequence is None and result.certificate is None


def test_auto_falls_through_to_exact_methods(monkeypatch):
    monkeypatch.setattr(recognize_module, "_constructive_steps", lambda g: None)
    assert recognize(C6).provenance == "3sat"
    monkeypatch.setattr(recognize_module, "SAT3_VERTEX_BOUND", 0)
    assert recognize(C6).provenance == "brute-force"


@settings(max_examples=30)
@given(graphs(max_a=3, max_b=3))
def test_exact_methods_agree(g):
    brute = recognize(g, "brute")
    sat3 = recognize(g, "sat3")
    assert brute.verdict == sat3.verdict
    if sat3.verdict is Verdict.YES:
        assert is_valid_sequence(g, sat3.sequence)


@settings(max_examples=20)
@given(graphs(min_a=3, max_a=4, min_b=3, max_b=4).filter(lambda g: g.n_a + g.n_b == 7))
def test_exact_methods_agree_on_seven_vertices(g):
    assert recognize(g, "brute").verdict == recognize(g, "sat3").verdict


@given(graphs(max_a=4, max_b=4))
def test_auto_never_contradicts_exhaustive_search(g):
    auto = recognize(g)
    assert auto.verdict is not Verdict.UNKNOWN
    assert auto.verdict == recognize(g, "brute").verdict
    if auto.verdict is Verdict.YES:
        assert is_valid_sequence(g, auto.sequence)


def _disagreement(g):
    brute, sat3, auto = recognize(g, "brute"), recognize(g, "sat3"), recognize(g)
    if not brute.verdict == sat3.verdict == auto.verdict:
        return str(g), brute.verdict, sat3.verdict, auto.verdict
    if sat3.verdict is Verdict.YES and not is_valid_sequence(g, sat3.sequence):
        return str(g), "invalid sat3 sequence", sat3.sequence
    return None


@pytest.mark.slow
def test_all_methods_agree_on_every_graph_up_to_three_by_three():
    found = [
        _disagreement(g)
        for n_a in range(4)
        for n_b in range(4)
        for g in all_graphs(n_a, n_b)
    ]
    assert [item for item in found if item] == []


@pytest.mark.slow
@pytest.mark.parametrize("shape", [(3, 4), (4, 3)])
def test_all_methods_agree_on_seeded_seven_vertex_graphs(shape):
    found = [_disagreement(random_bipartite(*shape, 0.5, seed)) for seed in range(200)]
    assert [item for item in found if item] == []
