"""
Seeded instance generation.

Randomness comes from SplitMix64 (Steele, Lea and Flood): a 64-bit state
advanced by 0x9E3779B97F4A7C15 and mixed with two xor-shift-multiply
rounds. Floats take the top 53 bits, so a (parameters, seed) pair yields
the same graph on every platform and in every language that implements
the same generator.
"""

import logging
from collections.abc import Callable, Sequence

from services.stick_graph.core import BipartiteGraph
from utils.constants import (
    ERR_FAMILY_PARAMS,
    ERR_FAMILY_VALUE,
    ERR_UNKNOWN_FAMILY,
    LIST_SEPARATOR,
)
from validators.errors import ValidationError
from validators.graph_validators import validate_density, validate_dimensions

logger = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) / (1 << 53)

    def randrange(self, n: int) -> int:
        """Integer in [0, n) by reduction modulo n."""
        return self.next_u64() % n

    def shuffled(self, size: int) -> list[int]:
        """Fisher-Yates permutation of range(size)."""
        items = list(range(size))
        for k in reversed(range(1, size)):
            j = self.randrange(k + 1)
            items[k], items[j] = items[j], items[k]
        return items


def random_bipartite(n_a: int, n_b: int, density: float, seed: int) -> BipartiteGraph:
    """
    Each entry is 1 iff the next draw is below density, in row-major order.

    Raises:
        ValidationError: If a dimension is negative or density is outside [0, 1].
    """
    validate_dimensions(n_a, n_b)
    validate_density(density)
    rng = SplitMix64(seed)
    return BipartiteGraph(
        n_a,
        n_b,
        tuple(tuple(rng.random() < density for _ in range(n_b)) for _ in range(n_a)),
    )


def random_staircase(n_a: int, n_b: int, seed: int) -> BipartiteGraph:
    """
    Shuffled matrix with simultaneous consecutive ones.

    Row r gets the nonempty interval [L_r, R_r] with L and R non-decreasing,
    which makes columns contiguous as well; rows and columns are then
    shuffled.
    """
    validate_dimensions(n_a, n_b)
    if n_a and not n_b:
        raise ValidationError(
            ERR_FAMILY_VALUE.format(name="staircase", detail="rows need at least one column")
        )
    rng = SplitMix64(seed)
    rows = []
    left = right = 0
    for _ in range(n_a):
        left = min(left + rng.randrange(2), n_b - 1)
        right = min(max(left, right) + rng.randrange(3), n_b - 1)
        rows.append(tuple(left <= c <= right for c in range(n_b)))
    g = BipartiteGraph(n_a, n_b, tuple(rows))
    return g.permuted(rng.shuffled(n_a), rng.shuffled(n_b))


def random_laminar(n_a: int, n_b: int, seed: int) -> BipartiteGraph:
    """
    Graph whose B-neighborhoods nest along the identity order of A.

    Free regions start as the whole A range. Each B-vertex picks a region
    and at most three positions in it; the gaps between its picks and the
    two ends become new regions, so later vertices sit between consecutive
    neighbors of earlier ones or share at most an endpoint with them.
    Columns are shuffled; the A order is kept.
    """
    validate_dimensions(n_a, n_b)
    rng = SplitMix64(seed)
    matrix = [[False] * n_b for _ in range(n_a)]
    regions = [(0, n_a - 1)] if n_a else []
    for p in rng.shuffled(n_b):
        if not regions:
            continue
        lo, hi = regions.pop(rng.randrange(len(regions)))
        span = list(range(lo, hi + 1))
        picks = sorted(
            span[k] for k in rng.shuffled(len(span))[: 1 + rng.randrange(min(3, len(span)))]
        )
        for i in picks:
            matrix[i][p] = True
        bounds = [lo, *picks, hi]
        regions.extend(
            (left, right) for left, right in zip(bounds, bounds[1:]) if left <= right
        )
    return BipartiteGraph(n_a, n_b, tuple(map(tuple, matrix)))


def _complete(n_a: int, n_b: int) -> BipartiteGraph:
    return BipartiteGraph(n_a, n_b, tuple((True,) * n_b for _ in range(n_a)))


def _empty(n_a: int, n_b: int) -> BipartiteGraph:
    return BipartiteGraph(n_a, n_b, tuple((False,) * n_b for _ in range(n_a)))


def _matching(n: int) -> BipartiteGraph:
    return BipartiteGraph.from_edges(n, n, [(i, i) for i in range(n)])


def _even_cycle(length: int) -> BipartiteGraph:
    if length < 4 or length % 2:
        raise ValidationError(
            ERR_FAMILY_VALUE.format(
                name="even_cycle", detail=f"length must be even and >= 4, got {length}"
            )
        )
    k = length // 2
    return BipartiteGraph.from_edges(
        k, k, [(i, p) for i in range(k) for p in (i, (i + 1) % k)]
    )


def _k44_minus_pm() -> BipartiteGraph:
    return BipartiteGraph(4, 4, tuple(tuple(i != p for p in range(4)) for i in range(4)))


def _staircase(n: int, m: int, width: int) -> BipartiteGraph:
    """Band: row i has ones in columns i .. i + width - 1."""
    if width < 1:
        raise ValidationError(
            ERR_FAMILY_VALUE.format(name="staircase", detail=f"width must be >= 1, got {width}")
        )
    return BipartiteGraph(
        n, m, tuple(tuple(i <= c < i + width for c in range(m)) for i in range(n))
    )


def _remark_a_matrix() -> BipartiteGraph:
    return BipartiteGraph.from_rows(["10100110", "01101100", "00011110"])


def _remark_b_matrix(star: int = 0) -> BipartiteGraph:
    if star not in (0, 1):
        raise ValidationError(
            ERR_FAMILY_VALUE.format(name="remark_b_matrix", detail=f"star must be 0 or 1, got {star}")
        )
    return BipartiteGraph.from_rows([[1, star], [0, 1], [1, 0], [star, 1]])


def _perm_antidiag(n: int) -> BipartiteGraph:
    return BipartiteGraph.from_edges(n, n, [(i, n - 1 - i) for i in range(n)])


def _perm_cycle(n: int) -> BipartiteGraph:
    return BipartiteGraph.from_edges(n, n, [(i, (i + 1) % n) for i in range(n)])


FAMILIES: dict[str, tuple[Callable[..., BipartiteGraph], tuple[str, ...], int]] = {
    "complete": (_complete, ("n_a", "n_b"), 2),
    "empty": (_empty, ("n_a", "n_b"), 2),
    "matching": (_matching, ("n",), 1),
    "even_cycle": (_even_cycle, ("length",), 1),
    "k44_minus_pm": (_k44_minus_pm, (), 0),
    "staircase": (_staircase, ("n", "m", "width"), 3),
    "remark_a_matrix": (_remark_a_matrix, (), 0),
    "remark_b_matrix": (_remark_b_matrix, ("star",), 0),
    "perm_antidiag": (_perm_antidiag, ("n",), 1),
    "perm_cycle": (_perm_cycle, ("n",), 1),
}


def family(name: str, params: Sequence[int] = ()) -> BipartiteGraph:
    """
    Named construction.

    Each family lists its parameter names; trailing optional ones (only
    remark_b_matrix's star) may be omitted.

    Raises:
        ValidationError: On an unknown name, a wrong parameter count or a bad value.
    """
    if name not in FAMILIES:
        raise ValidationError(
            ERR_UNKNOWN_FAMILY.format(name=name, known=LIST_SEPARATOR.join(FAMILIES))
        )
    builder, names, required = FAMILIES[name]
    if not required <= len(params) <= len(names):
        raise ValidationError(
            ERR_FAMILY_PARAMS.format(
                name=name,
                expected=LIST_SEPARATOR.join(names),
                actual=LIST_SEPARATOR.join(map(str, params)) or "nothing",
            )
        )
    if any(value < 0 for value in params):
        raise ValidationError(
            ERR_FAMILY_VALUE.format(name=name, detail="parameters must be non-negative")
        )
    logger.debug("family %s%s", name, tuple(params))
    return builder(*params)


if __name__ == "__main__":
    # TESTS

    assert random_bipartite(3, 3, 0.5, 42) == random_bipartite(3, 3, 0.5, 42)
    assert random_bipartite(2, 3, 0.0, 7).edge_count() == 0
    assert random_bipartite(2, 3, 1.0, 7).edge_count() == 6

    assert str(family("even_cycle", [6])) == "3x3[110/011/101]"
    assert str(family("k44_minus_pm")) == "4x4[0111/1011/1101/1110]"
    assert str(family("remark_b_matrix")) == "4x2[10/01/10/01]"
    assert str(family("perm_cycle", [3])) == "3x3[010/001/100]"

    print("Generator tests passed.")
