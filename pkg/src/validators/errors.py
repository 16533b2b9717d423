"""
Custom errors module.

Input problems derive from ValidationError; failures of a constructive step
to verify its own output derive from RuntimeError.
"""


class ValidationError(ValueError):
    """Custom error for validation problems."""

    def __init__(self, message: str) -> None:
        super().__init__(message)


class DimensionMismatchError(ValidationError):
    """An ordering, sequence or representation does not fit the graph."""


class BoundExceededError(ValidationError):
    """A configured size bound of an exhaustive search is exceeded."""

    def __init__(self, message: str, size: int | None = None, bound: int | None = None):
        super().__init__(message)
        self.size = size
        self.bound = bound


class ConstructionDefectError(RuntimeError):
    """A construction produced output that failed its own verification."""


class DiscrepancyError(RuntimeError):
    """The fixed-A 2-SAT verdict disagrees with exhaustive search."""
