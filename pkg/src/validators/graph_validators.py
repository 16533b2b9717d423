"""
Validators for graphs, orderings and ground sequences.

Each validator raises a ValidationError subclass with a message from
utils.constants; none of them return anything meaningful on success.
"""

from collections.abc import Iterable, Sequence

from utils.constants import (
    ERR_BOUND_EXCEEDED,
    ERR_DENSITY_RANGE,
    ERR_DIMENSION_MISMATCH,
    ERR_MATRIX_ENTRY,
    ERR_MATRIX_SHAPE,
    ERR_NEGATIVE_DIMENSION,
    ERR_ORDERING_NOT_PERMUTATION,
)
from validators.errors import (
    BoundExceededError,
    DimensionMismatchError,
    ValidationError,
)


def validate_dimensions(n_a: int, n_b: int) -> None:
    """Raises ValidationError if either side has a negative size."""
    if n_a < 0 or n_b < 0:
        raise ValidationError(ERR_NEGATIVE_DIMENSION.format(n_a=n_a, n_b=n_b))


def validate_matrix(matrix: Sequence[Sequence], n_a: int, n_b: int) -> None:
    """
    Ensures the matrix is n_a rows of n_b entries, each 0/1 or a bool.

    Raises:
        ValidationError: On a shape mismatch or a non-binary entry.
    """
    if len(matrix) != n_a:
        raise ValidationError(
            ERR_MATRIX_SHAPE.format(
                expected=n_a, cols=n_b, detail=f"{len(matrix)} rows"
            )
        )
    for row_index, row in enumerate(matrix):
        if len(row) != n_b:
            raise ValidationError(
                ERR_MATRIX_SHAPE.format(
                    expected=n_a,
                    cols=n_b,
                    detail=f"{len(row)} entries in row {row_index + 1}",
                )
            )
        for col_index, value in enumerate(row):
            if value not in (0, 1):
                raise ValidationError(
                    ERR_MATRIX_ENTRY.format(
                        row=row_index + 1, col=col_index + 1, value=value
                    )
                )


def validate_permutation(perm: Sequence[int]) -> None:
    """Raises ValidationError unless perm is a bijection on 0..len(perm)-1."""
    if sorted(perm) != list(range(len(perm))):
        shown = join_values(index + 1 for index in perm)
        raise ValidationError(
            ERR_ORDERING_NOT_PERMUTATION.format(perm=shown, size=len(perm))
        )


def ensure_size_matches(what: str, actual: tuple, expected: tuple) -> None:
    """Raises DimensionMismatchError when two (n_a, n_b)-like shapes differ."""
    if tuple(actual) != tuple(expected):
        raise DimensionMismatchError(
            ERR_DIMENSION_MISMATCH.format(
                what=what,
                actual=_shape_str(actual),
                expected=_shape_str(expected),
            )
        )


def ensure_within_bound(operation: str, size: int, bound: int) -> None:
    """Raises BoundExceededError when an exhaustive search would be too large."""
    if size > bound:
        raise BoundExceededError(
            ERR_BOUND_EXCEEDED.format(operation=operation, size=size, bound=bound),
            size=size,
            bound=bound,
        )


def validate_density(density: float) -> None:
    """Raises ValidationError unless 0 <= density <= 1."""
    if not 0.0 <= density <= 1.0:
        raise ValidationError(ERR_DENSITY_RANGE.format(density=density))


def join_values(values: Iterable) -> str:
    """Comma-joins values for messages."""
    return ",".join(str(value) for value in values)


def _shape_str(shape: tuple) -> str:
    return "x".join(str(part) for part in shape)


if __name__ == "__main__":
    # TESTS

    validate_dimensions(0, 0)
    validate_matrix([[0, 1], [1, 1]], 2, 2)
    validate_permutation([2, 0, 1])
    ensure_within_bound("search", 10, 10)
    validate_density(0.0)
    validate_density(1.0)

    try:
        validate_matrix([[0, 2]], 1, 2)
    except ValidationError as exc:
        assert str(exc) == "Matrix entry at row 1, column 2 must be 0 or 1, got 2."
    else:
        assert False, "Should raise Validation error on a non-binary entry"

    try:
        validate_permutation([0, 0])
    except ValidationError as exc:
        assert str(exc) == "Ordering 1,1 is not a permutation of 1..2."
    else:
        assert False, "Should raise Validation error on a repeated index"

    try:
        ensure_within_bound("search", 11, 10)
    except BoundExceededError as exc:
        assert exc.size == 11 and exc.bound == 10
    else:
        assert False, "Should raise BoundExceededError above the bound"

    try:
        ensure_size_matches("Ordering", (3,), (2,))
    except DimensionMismatchError as exc:
        assert str(exc) == "Ordering has shape 3, expected 2."
    else:
        assert False, "Should raise DimensionMismatchError on a size mismatch"

    print("Graph validators tests passed.")
