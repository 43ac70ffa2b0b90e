"""
Modified Bessel functions of the first kind, orders 0 and 1.

Arguments up to ``SERIES_SWITCH`` are summed from the ascending power series; above it
the Hankel asymptotic expansion is used in exp-scaled form. The scaled variants
``bessel_i0e``/``bessel_i1e`` return e^(-x) I(x) and stay finite for any x.
"""
import numpy as np

from tlsecho.model.errors import DomainError
from tlsecho.model.utils import as_output

SERIES_SWITCH = 20.0
_SERIES_RTOL = 1e-17
_MAX_SERIES_TERMS = 500
_ASYMPTOTIC_TERMS = 25


def check_argument(x, name: str = "x") -> np.ndarray:
    """Reject negative and non-finite arguments; returns a float array."""
    array = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(array)):
        raise DomainError(f"{name} must be finite.")
    if np.any(array < 0):
        raise DomainError(f"{name} must be >= 0, got {array[array < 0].flat[0]}.")
    return array


def _ascending_series(x: np.ndarray, order: int) -> np.ndarray:
    half = 0.5 * x
    quarter_square = half * half
    term = np.ones_like(x) if order == 0 else half.copy()
    total = term.copy()
    for k in range(1, _MAX_SERIES_TERMS):
        term = term * quarter_square / (k * (k + order))
        total += term
        if np.all(term <= _SERIES_RTOL * total):
            break
    return total


def _hankel_scaled(x: np.ndarray, order: int) -> np.ndarray:
    mu = 4.0 * order * order
    term = np.ones_like(x)
    total = term.copy()
    for k in range(1, _ASYMPTOTIC_TERMS + 1):
        term = -term * (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        total += term
    return total / np.sqrt(2.0 * np.pi * x)


def _evaluate(x, order: int, scaled: bool):
    array = check_argument(x)
    out = np.empty_like(array)
    small = array <= SERIES_SWITCH
    if np.any(small):
        values = _ascending_series(array[small], order)
        out[small] = values * np.exp(-array[small]) if scaled else values
    large = ~small
    if np.any(large):
        values = _hankel_scaled(array[large], order)
        if not scaled:
            with np.errstate(over="ignore"):
                values = values * np.exp(array[large])
        out[large] = values
    return as_output(x, out)


def bessel_i0(x):
    """I0(x); overflows to inf beyond x ~ 713, use :func:`bessel_i0e` there."""
    return _evaluate(x, 0, scaled=False)


def bessel_i1(x):
    """I1(x); overflows to inf beyond x ~ 713, use :func:`bessel_i1e` there."""
    return _evaluate(x, 1, scaled=False)


def bessel_i0e(x):
    return _evaluate(x, 0, scaled=True)


def bessel_i1e(x):
    return _evaluate(x, 1, scaled=True)
