import logging

import pytest

from cli.command_handlers import handle_interrupt
from decorators.input_error import CommandOutcome, input_error
from decorators.keyboard_interrupt_error import keyboard_interrupt_error
from validators.args_validators import ensure_args_have_n_arguments, validate_argument_type
from validators.errors import (
    BoundExceededError,
    DimensionMismatchError,
    DiscrepancyError,
    ValidationError,
)


def _raising(exc):
    @input_error
    def handler():
        raise exc

    return handler


@pytest.mark.parametrize(
    ("exc", "exit_code"),
    [
        (BoundExceededError("too big", size=12, bound=10), 4),
        (DimensionMismatchError("wrong shape"), 3),
        (ValidationError("bad input"), 3),
        (FileNotFoundError("no such file"), 3),
        (DiscrepancyError("solvers disagree"), 2),
    ],
)
def test_errors_map_to_exit_codes(exc, exit_code):
    outcome = _raising(exc)()
    assert outcome.exit_code == exit_code
    assert outcome.stdout == ""
    assert str(exc) in outcome.stderr


def test_internal_errors_are_logged(caplog):
    with caplog.at_level(logging.ERROR):
        _raising(DiscrepancyError("solvers disagree"))()
    assert "solvers disagree" in caplog.text


def test_other_errors_propagate():
    with pytest.raises(KeyError):
        _raising(KeyError("boom"))()


def test_outcome_passes_through():
    @input_error
    def handler():
        return CommandOutcome(1, "none\n")

    assert handler() == CommandOutcome(1, "none\n", "")


def test_interrupt_reports_unknown(capsys):
    @keyboard_interrupt_error(handle_interrupt)
    def search():
        raise KeyboardInterrupt

    assert search() == 2
    assert "Interrupted" in capsys.readouterr().err


def test_argument_validators():
    ensure_args_have_n_arguments(["3", "4", "7"], 3)
    with pytest.raises(ValidationError):
        ensure_args_have_n_arguments(["3", " ", "7"], 3)
    with pytest.raises(TypeError):
        validate_argument_type({}, (tuple, list))
