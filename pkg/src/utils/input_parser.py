"""
Utility module for parsing graph files, ground sequences and orderings.

Graph text comes in two layouts:

    3 3             edges 3 3
    110             1 1
    011             1 2
    101             ...

Lines starting with '#' and blank lines are ignored. Sequences are
comma-separated a<i>/b<j> tokens and orderings comma-separated indices,
both 1-based on the wire and 0-based in memory.
"""

from services.stick_graph.core import BipartiteGraph, GroundSequence, Ordering, Side, Vertex
from utils.constants import (
    COMMENT_PREFIX,
    EDGE_LIST_HEADER,
    ERR_PARSE_EDGE,
    ERR_PARSE_EMPTY,
    ERR_PARSE_EMPTY_LIST,
    ERR_PARSE_HEADER,
    ERR_PARSE_ORDER_TOKEN,
    ERR_PARSE_ROW,
    ERR_PARSE_ROW_COUNT,
    ERR_PARSE_VERTEX_TOKEN,
    LIST_SEPARATOR,
)
from validators.errors import ValidationError


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank, non-comment lines with their 1-based line numbers."""
    return [
        (lineno, line.strip())
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith(COMMENT_PREFIX)
    ]


def _parse_header(line: str) -> tuple[bool, int, int]:
    parts = line.split()
    is_edge_list = bool(parts) and parts[0].lower() == EDGE_LIST_HEADER
    sizes = parts[1:] if is_edge_list else parts
    if len(sizes) != 2 or not all(size.isdigit() for size in sizes):
        raise ValidationError(ERR_PARSE_HEADER.format(line=line))
    return is_edge_list, int(sizes[0]), int(sizes[1])


def parse_graph_text(text: str) -> BipartiteGraph:
    """
    Parses a matrix or edge-list graph description.

    Raises:
        ValidationError: On a malformed header, row or edge, or a wrong row count.
    """
    lines = _content_lines(text)
    if not lines:
        raise ValidationError(ERR_PARSE_EMPTY)

    is_edge_list, n_a, n_b = _parse_header(lines[0][1])
    body = lines[1:]

    if is_edge_list:
        edges = []
        for lineno, line in body:
            parts = line.split()
            if (
                len(parts) != 2
                or not all(part.isdigit() for part in parts)
                or not 1 <= int(parts[0]) <= n_a
                or not 1 <= int(parts[1]) <= n_b
            ):
                raise ValidationError(
                    ERR_PARSE_EDGE.format(line=line, lineno=lineno, n_a=n_a, n_b=n_b)
                )
            edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
        return BipartiteGraph.from_edges(n_a, n_b, edges)

    if n_b == 0:
        # Rows of a zero-column matrix are blank lines and were skipped above
        if body:
            lineno, line = body[0]
            raise ValidationError(ERR_PARSE_ROW.format(line=line, lineno=lineno, cols=n_b))
        return BipartiteGraph(n_a, 0, ((),) * n_a)
    if len(body) != n_a:
        raise ValidationError(ERR_PARSE_ROW_COUNT.format(expected=n_a, actual=len(body)))
    rows = []
    for lineno, line in body:
        if len(line) != n_b or any(ch not in "01" for ch in line):
            raise ValidationError(ERR_PARSE_ROW.format(line=line, lineno=lineno, cols=n_b))
        rows.append(tuple(ch == "1" for ch in line))
    return BipartiteGraph(n_a, n_b, tuple(rows))


def read_graph_file(path: str) -> BipartiteGraph:
    """Reads and parses a graph file (UTF-8)."""
    with open(path, encoding="utf-8") as file:
        return parse_graph_text(file.read())


def _split_list(text: str) -> list[str]:
    tokens = [token.strip() for token in text.split(LIST_SEPARATOR)]
    if not text.strip() or not all(tokens):
        raise ValidationError(ERR_PARSE_EMPTY_LIST)
    return tokens


def parse_vertex(token: str) -> Vertex:
    """
    Parses "a3" or "b1" into a 0-based Vertex.

    Raises:
        ValidationError: On any other token.
    """
    prefix, number = token[:1].lower(), token[1:]
    if prefix not in (Side.A.value, Side.B.value) or not number.isdigit() or int(number) < 1:
        raise ValidationError(ERR_PARSE_VERTEX_TOKEN.format(token=token))
    return Vertex(Side(prefix), int(number) - 1)


def parse_sigma(text: str, n_a: int, n_b: int) -> GroundSequence:
    """
    Parses a comma-separated ground sequence for an n_a x n_b graph.

    Raises:
        ValidationError: On a bad token, or a vertex that is out of range,
            repeated or missing.
    """
    if not text.strip() and n_a + n_b == 0:
        return GroundSequence(0, 0, ())
    return GroundSequence(n_a, n_b, tuple(map(parse_vertex, _split_list(text))))


def parse_ordering(text: str) -> Ordering:
    """
    Parses a comma-separated 1-based permutation such as "2,1,3".

    Raises:
        ValidationError: On a non-integer entry or a non-permutation.
    """
    if not text.strip():
        return Ordering(())
    indices = []
    for token in _split_list(text):
        if not token.isdigit() or int(token) < 1:
            raise ValidationError(ERR_PARSE_ORDER_TOKEN.format(token=token))
        indices.append(int(token) - 1)
    return Ordering(tuple(indices))


if __name__ == "__main__":
    # TESTS

    test_graph = parse_graph_text("# C6\n3 3\n110\n011\n101\n")
    assert str(test_graph) == "3x3[110/011/101]"
    assert parse_graph_text("edges 3 3\n1 1\n1 2\n2 2\n2 3\n3 1\n3 3\n") == test_graph
    assert parse_graph_text("0 0\n").shape == (0, 0)

    assert str(parse_sigma("a1,b1", 1, 1)) == "a1,b1"
    assert parse_ordering("2,1,3").perm == (1, 0, 2)

    try:
        parse_graph_text("2 2\n10\n1x\n")
    except ValidationError as exc:
        assert "line 3" in str(exc)
    else:
        assert False, "Should raise Validation error on a malformed row"

    try:
        parse_sigma("a1,c1", 1, 1)
    except ValidationError as exc:
        assert str(exc) == "Invalid vertex token 'c1'. Expected a<i> or b<j>."
    else:
        assert False, "Should raise Validation error on an unknown side"

    print("Input parser tests passed.")
