"""
Modified Struve functions L0, L1 and the Bessel-Struve differences.

For large x both I_n and L_n grow like e^x while their difference stays algebraic. The
differences I_n - L_n are therefore never formed by subtraction: up to
``DIFFERENCE_SWITCH`` they come from the positive integral

    I_n(x) - L_n(x) = (2/pi) x^n int_0^(pi/2) e^(-x cos t) sin^(2n) t dt

by Gauss-Legendre quadrature, and above it from their asymptotic expansions. Above
``SERIES_SWITCH`` L_n is recovered as I_n - (I_n - L_n).
"""
import math

import numpy as np

from tlsecho.model.specfun.bessel import SERIES_SWITCH, bessel_i0e, bessel_i1e, check_argument
from tlsecho.model.utils import as_output

_SERIES_RTOL = 1e-17
_MAX_SERIES_TERMS = 500
_MAX_ASYMPTOTIC_TERMS = 60

# the asymptotic differences are accurate to ~1e-17 from here on
DIFFERENCE_SWITCH = 40.0

# 64 Gauss-Legendre nodes on [0, pi/2] integrate e^(-x cos t) to full precision for x <= DIFFERENCE_SWITCH
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(64)
_ANGLES = 0.25 * math.pi * (_NODES + 1.0)
_ANGLE_WEIGHTS = 0.25 * math.pi * _WEIGHTS
_COSINES = np.cos(_ANGLES)
_SINE_SQUARES = np.sin(_ANGLES) ** 2

# Gamma(3/2) and Gamma(5/2)
_GAMMA_3_2 = 0.5 * math.sqrt(math.pi)
_GAMMA_5_2 = 1.5 * _GAMMA_3_2


def _ascending_series(x: np.ndarray, order: int) -> np.ndarray:
    half = 0.5 * x
    quarter_square = half * half
    if order == 0:
        term = half / (_GAMMA_3_2 * _GAMMA_3_2)
    else:
        term = quarter_square / (_GAMMA_3_2 * _GAMMA_5_2)
    total = term.copy()
    for k in range(_MAX_SERIES_TERMS):
        term = term * quarter_square / ((k + 1.5) * (k + order + 1.5))
        total += term
        if np.all(term <= _SERIES_RTOL * total):
            break
    return total


def _difference_asymptotic(x: np.ndarray, order: int) -> np.ndarray:
    """I_n(x) - L_n(x) for large x, truncated at the smallest term."""
    inverse_square = 1.0 / (x * x)
    term = np.ones_like(x)
    total = np.ones_like(x)
    active = np.ones(x.shape, dtype=bool)
    for k in range(1, _MAX_ASYMPTOTIC_TERMS):
        following = term * (2 * k - 1) ** 2 * inverse_square
        active &= (following < term) & (following > _SERIES_RTOL * np.abs(total))
        if not np.any(active):
            break
        contribution = following if order == 0 else following / (1.0 - 2.0 * k)
        total = np.where(active, total + contribution, total)
        term = np.where(active, following, term)
    if order == 0:
        return 2.0 / (math.pi * x) * total
    return 2.0 / math.pi * total


def _difference_integral(x: np.ndarray, order: int) -> np.ndarray:
    weights = _ANGLE_WEIGHTS if order == 0 else _ANGLE_WEIGHTS * _SINE_SQUARES
    integral = np.exp(-np.multiply.outer(x, _COSINES)) @ weights
    if order == 0:
        return 2.0 / math.pi * integral
    return 2.0 / math.pi * x * integral


def _bessel_series(x: np.ndarray, order: int) -> np.ndarray:
    return (bessel_i0e(x) if order == 0 else bessel_i1e(x)) * np.exp(x)


def _struve(x, order: int):
    array = check_argument(x)
    out = np.empty_like(array)
    small = array <= SERIES_SWITCH
    if np.any(small):
        out[small] = _ascending_series(array[small], order)
    large = ~small
    if np.any(large):
        with np.errstate(over="ignore"):
            out[large] = _bessel_series(array[large], order) - bessel_struve_difference(array[large], order)
    return as_output(x, out)


def struve_l0(x):
    return _struve(x, 0)


def struve_l1(x):
    return _struve(x, 1)


def bessel_struve_difference(x, order: int):
    """
    I_n(x) - L_n(x) for n in {0, 1}.

    Neither branch subtracts: quadrature of the positive integral up to
    ``DIFFERENCE_SWITCH``, the asymptotic expansion above it.
    """
    if order not in (0, 1):
        raise ValueError(f"order must be 0 or 1, got {order}.")
    array = check_argument(x)
    out = np.empty_like(array)
    small = array <= DIFFERENCE_SWITCH
    if np.any(small):
        out[small] = _difference_integral(array[small], order)
    large = ~small
    if np.any(large):
        out[large] = _difference_asymptotic(array[large], order)
    return as_output(x, out)


def scaled_kernel_combination(x):
    """
    e^(-x) * (I1(x) L0(x) - I0(x) L1(x)), written as e^(-x)[I0 (I1 - L1) - I1 (I0 - L0)].

    The scaled Bessel factors keep the product finite for any x >= 0.
    """
    array = check_argument(x)
    value = bessel_i0e(array) * bessel_struve_difference(array, 1) - bessel_i1e(array) * bessel_struve_difference(
        array, 0
    )
    return as_output(x, np.asarray(value, dtype=float))
