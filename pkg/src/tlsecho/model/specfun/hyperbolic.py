import numpy as np

from tlsecho.model.errors import DomainError
from tlsecho.model.utils import as_output


def _finite(x, name: str) -> np.ndarray:
    array = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(array)):
        raise DomainError(f"{name} must be finite.")
    return array


def sech2(x):
    """sech^2(x) = 4 e^(-2|x|) / (1 + e^(-2|x|))^2; underflows to 0 rather than overflowing."""
    array = _finite(x, "x")
    decay = np.exp(-2.0 * np.abs(array))
    return as_output(x, 4.0 * decay / (1.0 + decay) ** 2)


def coth(x):
    """coth(x) for x != 0; the x -> 0 limit must be handled by the caller."""
    array = _finite(x, "x")
    if np.any(array == 0):
        raise DomainError("coth is undefined at x = 0.")
    return as_output(x, 1.0 / np.tanh(array))
