"""
This module provides validation functions for physical and numerical parameters.

Validation Functions:
    - is_finite(value): Checks if the value is a finite real number.
    - validate_finite(value, name): Raises if the value is not a finite real number.
    - validate_non_negative(value, name): Raises if the value is negative or not finite.
    - validate_positive(value, name): Raises if the value is not strictly positive.
    - validate_time_order(t1, t2): Raises if the interval [t1, t2] is reversed.
    - validate_target(target): Raises if the target is not a known nonclassicality quantity.
"""
import math
from numbers import Real

from driven_qubit.constants import TARGETS
from driven_qubit.exceptions import InvalidParameterError


def is_finite(value):
    """
    Checks if the given value is a finite real number.

    Args:
        value: The value to be validated.

    Returns:
        bool: True if valid, False otherwise.
    """
    return isinstance(value, Real) and not isinstance(value, bool) and math.isfinite(value)


def validate_finite(value, name):
    """
    Ensures the value is a finite real number.

    Args:
        value: The value to be validated.
        name (str): Parameter name used in the error message.

    Raises:
        InvalidParameterError: If the value is NaN, infinite or not a real number.
    """
    if not is_finite(value):
        raise InvalidParameterError(f"{name} must be a finite real number, got {value!r}.")


def validate_non_negative(value, name):
    """
    Ensures the value is a finite real number greater or equal than zero.

    Args:
        value: The value to be validated.
        name (str): Parameter name used in the error message.

    Raises:
        InvalidParameterError: If the value is negative or not finite.
    """
    validate_finite(value, name)

    if value < 0:
        raise InvalidParameterError(f"{name} must be non-negative, got {value!r}.")


def validate_positive(value, name):
    """
    Ensures the value is a finite real number strictly greater than zero.

    Args:
        value: The value to be validated.
        name (str): Parameter name used in the error message.

    Raises:
        InvalidParameterError: If the value is zero, negative or not finite.
    """
    validate_finite(value, name)

    if value <= 0:
        raise InvalidParameterError(f"{name} must be positive, got {value!r}.")


def validate_time_order(t1, t2):
    """
    Ensures [t1, t2] is a finite, forward time interval.

    Raises:
        InvalidParameterError: If any bound is not finite or t1 > t2.
    """
    validate_finite(t1, "t1")
    validate_finite(t2, "t2")

    if t1 > t2:
        raise InvalidParameterError(f"t1 must not exceed t2, got t1={t1!r} and t2={t2!r}.")


def validate_target(target):
    """
    Ensures the target names a supported quantity.

    Raises:
        InvalidParameterError: If the target is unknown.
    """
    if target not in TARGETS:
        raise InvalidParameterError(f"target must be one of: {', '.join(TARGETS)}, got {target!r}.")
