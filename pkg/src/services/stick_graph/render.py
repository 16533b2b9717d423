"""
Drawing and geometric re-checking of Stick representations.

Slot k is the point (k, -k) of the ground line. In SVG the y axis points
down, so world (x, y) is drawn at (x * unit, -y * unit) and every
coordinate stays an integer.
"""

import logging
from dataclasses import dataclass

from services.stick_graph.core import BipartiteGraph, StickRepresentation, Vertex
from utils.constants import (
    ASCII_CROSSING,
    ASCII_EMPTY,
    ASCII_HORIZONTAL,
    ASCII_VERTICAL,
    ERR_UNKNOWN_FORMAT,
    LIST_SEPARATOR,
    MSG_INVALID,
    MSG_VALID,
    RENDER_FORMATS,
    SVG_FONT_SIZE,
    SVG_MARGIN,
    SVG_STROKE_A,
    SVG_STROKE_B,
    SVG_STROKE_GROUND,
    SVG_UNIT,
)
from validators.errors import ValidationError
from validators.graph_validators import ensure_size_matches

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeometryReport:
    """Edges the drawing misses and crossings it adds, as (i, p) pairs."""

    missing: tuple[tuple[int, int], ...] = ()
    spurious: tuple[tuple[int, int], ...] = ()

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return MSG_VALID
        parts = []
        if self.missing:
            parts.append(f"missing {_pairs_str(self.missing)}")
        if self.spurious:
            parts.append(f"spurious {_pairs_str(self.spurious)}")
        return f"{MSG_INVALID}: " + "; ".join(parts)

    @property
    def ok(self) -> bool:
        return not self.missing and not self.spurious


def _pairs_str(pairs: tuple[tuple[int, int], ...]) -> str:
    return " ".join(f"{Vertex.a(i)}-{Vertex.b(p)}" for i, p in pairs)


def segments_cross(rep: StickRepresentation, i: int, p: int) -> bool:
    """
    True iff the closed segments of a_i and b_p meet.

    a_i lies on y = -t_a for x in [t_a, t_a + len_a]; b_p on x = t_b for
    y in [-t_b, -t_b + len_b]. Slots are distinct, so they meet exactly
    when t_a < t_b <= t_a + len_a and t_b - len_b <= t_a.
    """
    t_a, t_b = rep.touch_a[i], rep.touch_b[p]
    return t_a < t_b <= t_a + rep.length_a[i] and t_b - rep.length_b[p] <= t_a


def verify_geometry(rep: StickRepresentation, g: BipartiteGraph) -> GeometryReport:
    """
    Compares every horizontal/vertical crossing of rep with the edges of g.

    Raises:
        DimensionMismatchError: If rep does not cover g's vertices.
    """
    ensure_size_matches("Representation", (rep.n_a, rep.n_b), g.shape)
    missing, spurious = [], []
    for i in range(g.n_a):
        for p in range(g.n_b):
            crosses = segments_cross(rep, i, p)
            if g.matrix[i][p] and not crosses:
                missing.append((i, p))
            elif crosses and not g.matrix[i][p]:
                spurious.append((i, p))
    report = GeometryReport(tuple(missing), tuple(spurious))
    logger.debug("verify_geometry on %s: %s", g, report)
    return report


def _render_svg(rep: StickRepresentation) -> str:
    unit = SVG_UNIT
    slots = len(rep.sequence)
    size = (slots + 1 + SVG_MARGIN) * unit
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>{LIST_SEPARATOR.join(map(str, rep.sequence))}</title>",
        f'<line x1="0" y1="0" x2="{size}" y2="{size}" stroke="{SVG_STROKE_GROUND}" '
        'stroke-width="1" stroke-dasharray="4 4"/>',
    ]

    for vertex in rep.sequence:
        t, length = rep.touch(vertex), rep.length(vertex)
        if vertex.is_a:
            end_x, end_y, stroke = (t + length) * unit, t * unit, SVG_STROKE_A
        else:
            end_x, end_y, stroke = t * unit, (t - length) * unit, SVG_STROKE_B
        lines.append(
            f'<line x1="{t * unit}" y1="{t * unit}" x2="{end_x}" y2="{end_y}" '
            f'stroke="{stroke}" stroke-width="2" stroke-linecap="round"/>'
        )

    for vertex in rep.sequence:
        t = rep.touch(vertex)
        lines.append(
            f'<text x="{t * unit - unit // 2}" y="{t * unit + unit // 2}" '
            f'font-size="{SVG_FONT_SIZE}" font-family="monospace">{vertex}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _render_ascii(rep: StickRepresentation) -> str:
    """Row k-1 and column k-1 of the grid hold slot k; rows grow downwards."""
    slots = len(rep.sequence)
    grid = [[ASCII_EMPTY] * slots for _ in range(slots)]

    for i in range(rep.n_a):
        t = rep.touch_a[i]
        for x in range(t, t + rep.length_a[i] + 1):
            grid[t - 1][x - 1] = ASCII_HORIZONTAL
    for p in range(rep.n_b):
        t = rep.touch_b[p]
        for y in range(t - rep.length_b[p], t + 1):
            cell = grid[y - 1][t - 1]
            grid[y - 1][t - 1] = ASCII_CROSSING if cell == ASCII_HORIZONTAL else ASCII_VERTICAL

    for vertex in rep.sequence:
        t = rep.touch(vertex)
        grid[t - 1][t - 1] = vertex.side.value

    rows = ["".join(row).rstrip() for row in grid]
    rows.append(f"sigma: {LIST_SEPARATOR.join(map(str, rep.sequence))}")
    return "\n".join(rows) + "\n"


def render(rep: StickRepresentation, format: str) -> str:
    """
    Draws rep as SVG or as an ASCII grid.

    SVG: a dashed ground line, then one line element per segment in sigma
    order (zero-length segments become round dots), then the labels.
    ASCII: '-' and '|' for segments, '+' where they cross, the side letter
    at each touch point and a closing legend line with sigma.

    Raises:
        ValidationError: If format is unknown.
    """
    match format:
        case "svg":
            return _render_svg(rep)
        case "ascii":
            return _render_ascii(rep)
        case _:
            raise ValidationError(
                ERR_UNKNOWN_FORMAT.format(
                    fmt=format, known=LIST_SEPARATOR.join(RENDER_FORMATS)
                )
            )


if __name__ == "__main__":
    # TESTS
    from services.stick_graph.core import GroundSequence
    from services.stick_graph.oracle import canonical_representation

    test_k11 = BipartiteGraph.from_rows(["1"])
    test_rep = canonical_representation(
        test_k11, GroundSequence(1, 1, (Vertex.a(0), Vertex.b(0)))
    )
    assert render(test_rep, "svg").count("<line ") == 3
    assert render(test_rep, "ascii") == "a+\n b\nsigma: a1,b1\n"
    assert verify_geometry(test_rep, test_k11)

    test_empty = BipartiteGraph.from_rows(["0"])
    test_rep = canonical_representation(
        test_empty, GroundSequence(1, 1, (Vertex.a(0), Vertex.b(0)))
    )
    assert verify_geometry(test_rep, test_empty)
    assert not verify_geometry(test_rep, test_k11)

    print("Render tests passed.")
