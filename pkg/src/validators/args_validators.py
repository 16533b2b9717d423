"""
Validators for command-line argument structure before further operations.

These functions check the number of positional parameters, the presence of
mode-specific options and argument types.
"""

from utils.constants import ERR_ARG_COUNT_ERROR, ERR_MISSING_OPTION, ERR_TYPE_ERROR
from validators.errors import ValidationError


def ensure_args_have_n_arguments(
    args: list[str], expected: int, details: str = ""
) -> None:
    """
    Ensures the given number of non-empty arguments are provided.

    Args:
        args (list[str]): List of arguments.
        expected (int): The number of expected non-empty arguments.
        details (str, optional): Additional message for clarification.

    Raises:
        ValidationError: If the number of arguments is incorrect or any are empty.
    """
    if len(args) != expected or not all(str(arg).strip() for arg in args):
        plural = "s" if expected != 1 else ""
        details_formatted = f" ({details})" if details else ""
        msg = ERR_ARG_COUNT_ERROR.format(
            expected=expected, plural=plural, details=details_formatted
        )
        raise ValidationError(msg)


def ensure_option_present(value: object, option: str, mode: str) -> None:
    """
    Ensures an option required by the selected mode was given.

    Raises:
        ValidationError: If the option value is None.
    """
    if value is None:
        raise ValidationError(ERR_MISSING_OPTION.format(option=option, mode=mode))


def validate_argument_type(obj: object, obj_type: type | tuple[type, ...]) -> None:
    """
    Ensures the provided object is of one of the expected types.

    Args:
        obj: The object to check.
        obj_type: The expected type or tuple/list of types.

    Raises:
        TypeError: If the object's type is incorrect.
    """
    if not isinstance(obj, obj_type):
        if isinstance(obj_type, (tuple, list)):
            expected = ", ".join([o_type.__name__ for o_type in obj_type])
        else:
            expected = obj_type.__name__

        actual = type(obj).__name__
        raise TypeError(ERR_TYPE_ERROR.format(expected=expected, actual=actual))


if __name__ == "__main__":
    # TESTS

    validate_argument_type((0, 1), tuple)
    validate_argument_type([0, 1], (tuple, list))
    ensure_args_have_n_arguments(["3", "3"], 2)
    ensure_option_present("1,2", "--order-a", "--ordered")

    try:
        validate_argument_type({}, tuple)
    except TypeError as exc:
        assert str(exc) == "Expected type 'tuple', but received type 'dict'."
    else:
        assert False, "Should raise TypeError error when type is not of expected type."

    try:
        ensure_args_have_n_arguments(["8"], 3, "n m w")
    except ValidationError as exc:
        assert str(exc) == "You must provide 3 non-empty arguments (n m w)."
    else:
        assert False, "Should raise Validation error on a wrong parameter count."

    try:
        ensure_option_present(None, "--order-a", "--ordered")
    except ValidationError as exc:
        assert str(exc) == "Option --order-a is required for --ordered."
    else:
        assert False, "Should raise Validation error when the option is missing."

    print("Args Validator tests passed.")
