import pytest
from hypothesis import given

from services.stick_graph.core import BipartiteGraph, GroundSequence, Vertex
from services.stick_graph.oracle import canonical_representation, is_valid_sequence
from services.stick_graph.render import render, segments_cross, verify_geometry
from strategies import graphs_with_sequence
from validators.errors import DimensionMismatchError, ValidationError

K11 = BipartiteGraph.from_rows(["1"])
PERM_CYCLE = BipartiteGraph.from_rows(["010", "001", "100"])
FIGURE = BipartiteGraph.from_rows(["1000", "0100", "0111"])


def _rep(g, text):
    vertices = tuple(
        Vertex.a(int(token[1:]) - 1) if token[0] == "a" else Vertex.b(int(token[1:]) - 1)
        for token in text.split(",")
    )
    return canonical_representation(g, GroundSequence(g.n_a, g.n_b, vertices))


def test_single_edge_svg():
    svg = render(_rep(K11, "a1,b1"), "svg")
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>\n")
    assert 'width="80" height="80"' in svg
    assert "<title>a1,b1</title>" in svg
    # ground line plus one line per segment
    assert svg.count("<line ") == 3
    assert 'x1="20" y1="20" x2="40" y2="20"' in svg
    assert 'x1="40" y1="40" x2="40" y2="20"' in svg


def test_single_edge_ascii():
    assert render(_rep(K11, "a1,b1"), "ascii") == "a+\n b\nsigma: a1,b1\n"


def test_zero_length_segments_are_dots():
    svg = render(_rep(BipartiteGraph.from_rows(["0"]), "a1,b1"), "svg")
    assert 'x1="20" y1="20" x2="20" y2="20"' in svg
    assert 'x1="40" y1="40" x2="40" y2="40"' in svg
    assert svg.count('stroke-linecap="round"') == 2


def test_labels_follow_sigma():
    order = "a1,b1,a2,a3,b2,b3,b4"
    svg = render(_rep(FIGURE, order), "svg")
    positions = [svg.index(f">{label}</text>") for label in order.split(",")]
    assert positions == sorted(positions)


def test_geometry_of_valid_drawing():
    rep = _rep(FIGURE, "a1,b1,a2,a3,b2,b3,b4")
    report = verify_geometry(rep, FIGURE)
    assert report.ok
    assert str(report) == "valid"
    assert segments_cross(rep, 2, 3)
    assert not segments_cross(rep, 1, 2)


def test_geometry_reports_spurious_crossing():
    report = verify_geometry(_rep(PERM_CYCLE, "a1,a2,a3,b1,b2,b3"), PERM_CYCLE)
    assert not report
    assert report.spurious == ((1, 1),)
    assert not report.missing
    assert str(report) == "invalid: spurious a2-b2"


def test_geometry_reports_missing_edge():
    report = verify_geometry(_rep(K11, "b1,a1"), K11)
    assert report.missing == ((0, 0),)
    assert str(report) == "invalid: missing a1-b1"


def test_render_errors():
    rep = _rep(K11, "a1,b1")
    with pytest.raises(ValidationError, match="Unknown format 'png'"):
        render(rep, "png")
    with pytest.raises(DimensionMismatchError):
        verify_geometry(rep, PERM_CYCLE)


@given(graphs_with_sequence())
def test_drawing_realizes_graph_iff_sequence_is_valid(case):
    g, sigma = case
    report = verify_geometry(canonical_representation(g, sigma), g)
    assert report.ok == bool(is_valid_sequence(g, sigma))


@given(graphs_with_sequence())
def test_ascii_grid_has_one_row_per_slot(case):
    g, sigma = case
    text = render(canonical_representation(g, sigma), "ascii")
    lines = text.splitlines()
    assert len(lines) == len(sigma) + 1
    assert lines[-1].startswith("sigma:")
