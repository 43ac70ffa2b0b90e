from typing import Any, Optional

import numpy as np

from tlsecho.model.errors import DomainError


def validate_float(
    value: Any,
    name: str,
    minimum: Optional[float] = None,
    strict: bool = False,
    maximum: Optional[float] = None,
) -> float:
    """
    Convert a value to a finite float and check its bounds.

    Args:
        value: The value to convert.
        name (str): Name used in the error message.
        minimum (float, optional): Lower bound, inclusive unless ``strict``.
        strict (bool): Make the lower bound exclusive.
        maximum (float, optional): Inclusive upper bound.

    Raises:
        DomainError: If the value is not a finite number or is out of bounds.
    """
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a number, got {value!r}.") from None
    if not np.isfinite(number):
        raise DomainError(f"{name} must be finite, got {number}.")
    if minimum is not None:
        if strict and number <= minimum:
            raise DomainError(f"{name} must be > {minimum}, got {number}.")
        if not strict and number < minimum:
            raise DomainError(f"{name} must be >= {minimum}, got {number}.")
    if maximum is not None and number > maximum:
        raise DomainError(f"{name} must be <= {maximum}, got {number}.")
    return number


def validate_array(value: Any, name: str, minimum: Optional[float] = None, strict: bool = False) -> np.ndarray:
    """Array counterpart of :func:`validate_float`; returns a float ndarray."""
    try:
        array = np.asarray(value, dtype=float)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be numeric.") from None
    if not np.all(np.isfinite(array)):
        raise DomainError(f"{name} must be finite.")
    if minimum is not None:
        bad = array <= minimum if strict else array < minimum
        if np.any(bad):
            relation = ">" if strict else ">="
            raise DomainError(f"{name} must be {relation} {minimum}, got {array[bad].flat[0]}.")
    return array


def validate_seed(seed: Any) -> int:
    """Seeds are unsigned 64-bit integers."""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise DomainError(f"seed must be an integer, got {seed!r}.")
    number = int(seed)
    if not 0 <= number < 2 ** 64:
        raise DomainError(f"seed must lie in [0, 2**64), got {number}.")
    return number


def as_output(template: Any, array: np.ndarray):
    """Return a Python float when ``template`` was a scalar, the array otherwise."""
    if np.ndim(template) == 0:
        return float(array)
    return array
