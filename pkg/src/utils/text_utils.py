"""
Serializers for command output.

Everything written to stdout is plain and byte-stable; the status line for
stderr is the only colored text.
"""

from collections.abc import Iterable

from colorama import Fore, Style

from services.stick_graph.core import BipartiteGraph, Verdict, Vertex
from utils.constants import (
    LIST_SEPARATOR,
    MSG_STATUS_LINE,
    MSG_STATUS_NO,
    MSG_STATUS_UNKNOWN,
    MSG_STATUS_YES,
)

_VERDICT_STYLE = {
    Verdict.YES: (Fore.GREEN, MSG_STATUS_YES),
    Verdict.NO: (Fore.RED, MSG_STATUS_NO),
    Verdict.UNKNOWN: (Fore.YELLOW, MSG_STATUS_UNKNOWN),
}


def format_graph(g: BipartiteGraph) -> str:
    """Matrix file text: header "n m" and one 0/1 line per row."""
    rows = ["".join("1" if value else "0" for value in row) for row in g.matrix]
    return "\n".join([f"{g.n_a} {g.n_b}", *rows]) + "\n"


def format_vertices(vertices: Iterable[Vertex]) -> str:
    """Comma-separated a<i>/b<j> tokens, the wire format of sigma and cycles."""
    return LIST_SEPARATOR.join(str(vertex) for vertex in vertices)


def format_lines(*lines: object) -> str:
    """Joins non-empty lines with LF and a trailing newline."""
    kept = [str(line) for line in lines if line is not None and str(line) != ""]
    return "\n".join(kept) + "\n" if kept else ""


def format_status(command: str, verdict: Verdict, details: str = "") -> str:
    """
    Colored one-line summary for stderr.

    >>> format_status("recognize", Verdict.NO, "k44-minus-pm")  # doctest: +SKIP
    'recognize: no (k44-minus-pm)'
    """
    color, text = _VERDICT_STYLE[verdict]
    suffix = f" ({details})" if details else ""
    return (
        color
        + Style.BRIGHT
        + MSG_STATUS_LINE.format(command=command, verdict=text, details=suffix)
        + Style.RESET_ALL
    )


if __name__ == "__main__":
    # TESTS

    test_graph = BipartiteGraph.from_rows(["10", "01"])
    assert format_graph(test_graph) == "2 2\n10\n01\n"
    assert format_vertices([Vertex.a(0), Vertex.b(1)]) == "a1,b2"
    assert format_lines("a1,b1", None, "") == "a1,b1\n"
    assert format_lines() == ""
    assert "recognize: yes (3sat)" in format_status("recognize", Verdict.YES, "3sat")

    print("Text utils tests passed.")
