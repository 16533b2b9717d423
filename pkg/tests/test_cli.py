import pytest

from decorators.input_error import CommandOutcome, input_error
from main import run
from services.stick_graph.generator import family
from utils.text_utils import format_graph
from validators.errors import ConstructionDefectError

K44_TEXT = "4 4\n0111\n1011\n1101\n1110\n"
FIGURE_TEXT = "edges 3 4\n1 1\n2 2\n3 2\n3 3\n3 4\n"
PERM_CYCLE_TEXT = "3 3\n010\n001\n100\n"


@pytest.fixture
def graph_file(tmp_path):
    def write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def test_recognize_prints_certificate(graph_file):
    outcome = run(["recognize", graph_file(K44_TEXT)])
    assert outcome.exit_code == 1
    assert outcome.stdout == "k44-minus-pm rows=a1,a2,a3,a4 cols=b1,b2,b3,b4\n"
    assert "recognize: no (k44-minus-pm)" in outcome.stderr


def test_recognize_prints_sigma(graph_file):
    outcome = run(["recognize", graph_file("3 3\n110\n011\n101\n")])
    assert outcome.exit_code == 0
    assert outcome.stdout.count(",") == 5
    assert outcome.stdout.endswith("\n")


def test_recognize_dimacs(graph_file):
    outcome = run(["recognize", graph_file("1 1\n1\n"), "--emit", "dimacs"])
    assert outcome.exit_code == 0
    assert outcome.stdout == "c 1 a1<b1\np cnf 1 1\n1 0\n"


def test_recognize_bound_exceeded(graph_file):
    path = graph_file(format_graph(family("complete", (6, 5))))
    outcome = run(["recognize", path, "--method", "brute"])
    assert outcome.exit_code == 4
    assert outcome.stdout == ""
    assert "exceeds the bound 10" in outcome.stderr


def test_verify(graph_file):
    path = graph_file(FIGURE_TEXT)
    outcome = run(["verify", path, "--sigma", "a1,b1,a2,a3,b2,b3,b4"])
    assert outcome.exit_code == 0
    assert outcome.stdout == "valid\n"

    outcome = run(["verify", path, "--sigma", "b1,a1,a2,a3,b2,b3,b4"])
    assert outcome.exit_code == 1
    assert outcome.stdout.startswith("invalid: ")


def test_solve_ab(graph_file):
    outcome = run(["solve-ab", graph_file("1 1\n0\n"), "--order-a", "1", "--order-b", "1"])
    assert (outcome.exit_code, outcome.stdout) == (0, "a1,b1\n")

    path = graph_file(PERM_CYCLE_TEXT)
    orders = ["--order-a", "1,2,3", "--order-b", "1,2,3"]
    outcome = run(["solve-ab", path, *orders, "--emit", "cycle"])
    assert (outcome.exit_code, outcome.stdout) == (1, "b2,a2,a3,b1\n")
    outcome = run(["solve-ab", path, *orders])
    assert outcome.stdout == "P1 rows=a1,a2,a3 cols=b1,b2,b3\n"

    outcome = run(["solve-ab", path, "--order-a", "1,2,3", "--order-b", "2,1,3", "--emit", "pattern"])
    assert (outcome.exit_code, outcome.stdout) == (0, "none\n")


def test_solve_a(graph_file):
    path = graph_file("4 2\n10\n01\n10\n01\n")
    outcome = run(["solve-a", path, "--order-a", "1,2,3,4"])
    assert outcome.exit_code == 1
    assert outcome.stdout == "fixed-a-obstruction rows=a1,a2,a3,a4 cols=b1,b2\n"

    outcome = run(["solve-a", path, "--order-a", "1,3,2,4"])
    assert outcome.exit_code == 0
    assert "solve-a: yes (2sat)" in outcome.stderr

    outcome = run(["solve-a", path, "--order-a", "1,2,3,4", "--emit", "dimacs"])
    assert outcome.exit_code == 0
    assert outcome.stdout.startswith("c 1 b1<b2\np cnf 1 ")


def test_patterns(graph_file):
    outcome = run(["patterns", graph_file(K44_TEXT), "--k44"])
    assert outcome.exit_code == 1
    assert outcome.stdout.startswith("k44-minus-pm rows=")

    outcome = run(["patterns", graph_file("2 2\n11\n11\n"), "--universal"])
    assert (outcome.exit_code, outcome.stdout) == (0, "none\n")

    outcome = run(["patterns", graph_file(PERM_CYCLE_TEXT), "--ordered", "--order-a", "1,2,3"])
    assert outcome.exit_code == 3
    assert "--order-b" in outcome.stderr


def test_gen():
    outcome = run(["gen", "--family", "even_cycle", "6"])
    assert (outcome.exit_code, outcome.stdout) == (0, "3 3\n110\n011\n101\n")
    assert run(["gen", "--random", "3", "4", "0.5", "9"]) == run(
        ["gen", "--random", "3", "4", "0.5", "9"]
    )
    assert run(["gen", "--random", "3", "4", "dense", "9"]).exit_code == 3
    assert run(["gen", "--family", "petersen"]).exit_code == 3


def test_render(graph_file):
    path = graph_file("1 1\n1\n")
    outcome = run(["render", path, "--sigma", "a1,b1", "--format", "ascii"])
    assert (outcome.exit_code, outcome.stdout) == (0, "a+\n b\nsigma: a1,b1\n")
    outcome = run(["render", path, "--sigma", "b1,a1"])
    assert outcome.exit_code == 1
    assert outcome.stdout.startswith("<svg ")


def test_input_errors(graph_file, tmp_path):
    assert run(["recognize", graph_file("2 2\n10\n")]).exit_code == 3
    assert run(["recognize", str(tmp_path / "missing.txt")]).exit_code == 3
    assert run(["frobnicate"]).exit_code == 3
    assert run(["verify", graph_file("1 1\n1\n"), "--sigma", "a1,c1"]).exit_code == 3


def test_internal_defect_is_reported_as_unknown():
    @input_error
    def broken():
        raise ConstructionDefectError("bad staircase")

    outcome = broken()
    assert outcome == CommandOutcome(2, "", "Unexpected internal error: bad staircase")
