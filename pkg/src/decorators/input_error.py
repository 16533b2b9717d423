"""
Provides a decorator for turning library errors into command outcomes.
"""

import logging
from dataclasses import dataclass

from utils.constants import (
    EXIT_BOUND_EXCEEDED,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    ERR_UNEXPECTED,
)
from validators.errors import (
    BoundExceededError,
    ConstructionDefectError,
    DiscrepancyError,
    ValidationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommandOutcome:
    """
    What a command handler produced.

    Attributes:
        exit_code (int): Process exit code.
        stdout (str): Machine-readable output, LF terminated.
        stderr (str): Human-readable status or error text.
    """

    exit_code: int
    stdout: str = ""
    stderr: str = ""


def input_error(func):
    """
    Decorator for handling errors raised inside command handler functions.

    It catches and maps the following exceptions:
    - BoundExceededError: a size bound was exceeded, exit 4
    - ValidationError: malformed input or usage, exit 3
    - OSError: the graph file could not be read, exit 3
    - ConstructionDefectError, DiscrepancyError: an internal check failed,
      logged and reported as unknown, exit 2

    Returns:
        CommandOutcome: The handler's outcome, or one describing the error.
    """

    def inner(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BoundExceededError as exc:
            return CommandOutcome(EXIT_BOUND_EXCEEDED, stderr=str(exc))
        except ValidationError as exc:
            return CommandOutcome(EXIT_USAGE, stderr=str(exc))
        except OSError as exc:
            return CommandOutcome(EXIT_USAGE, stderr=str(exc))
        except (ConstructionDefectError, DiscrepancyError) as exc:
            logger.error("Internal check failed: %s", exc)
            return CommandOutcome(EXIT_UNKNOWN, stderr=ERR_UNEXPECTED.format(error=exc))

    return inner
