"""Shared hypothesis strategies for graphs, orders and ground sequences."""

from hypothesis import strategies as st

from services.stick_graph.core import BipartiteGraph, GroundSequence, Ordering, Vertex


@st.composite
def graphs(draw, max_a: int = 4, max_b: int = 4, min_a: int = 0, min_b: int = 0):
    n_a = draw(st.integers(min_a, max_a))
    n_b = draw(st.integers(min_b, max_b))
    rows = draw(
        st.lists(
            st.lists(st.booleans(), min_size=n_b, max_size=n_b),
            min_size=n_a,
            max_size=n_a,
        )
    )
    return BipartiteGraph(n_a, n_b, tuple(map(tuple, rows)))


@st.composite
def orderings(draw, size: int):
    return Ordering(tuple(draw(st.permutations(range(size)))))


@st.composite
def sequences(draw, n_a: int, n_b: int):
    vertices = [Vertex.a(i) for i in range(n_a)] + [Vertex.b(p) for p in range(n_b)]
    return GroundSequence(n_a, n_b, tuple(draw(st.permutations(vertices))))


@st.composite
def graphs_with_sequence(draw, max_total: int = 8):
    g = draw(graphs(max_a=max_total // 2, max_b=max_total // 2))
    return g, draw(sequences(g.n_a, g.n_b))


def all_graphs(n_a: int, n_b: int):
    """Every n_a x n_b 0/1 matrix, in binary counting order."""
    cells = n_a * n_b
    for code in range(1 << cells):
        yield BipartiteGraph(
            n_a,
            n_b,
            tuple(
                tuple(bool(code >> (i * n_b + p) & 1) for p in range(n_b))
                for i in range(n_a)
            ),
        )
