"""
Single-series decay fits with lmfit models: a simple exponential for T2 and a
stretched exponential for T1.
"""
import logging
from typing import List, NamedTuple

import numpy as np
from lmfit import Model

from tlsecho.model.errors import ConvergenceError, InsufficientDataError
from tlsecho.model.fitting.dataset import DecayDataset, TemperatureSeries

logger = logging.getLogger(__name__)

_FIT_KWS = {"ftol": 1e-14, "xtol": 1e-14, "gtol": 1e-14}
# decay rate in units of 1 / (largest delay); slower decays are not resolved by the data
_MIN_RATE = 1e-3
_P_BOUNDS = (0.1, 2.0)


class SimpleExponentialFit(NamedTuple):
    a0: float
    t2: float


class StretchedExponentialFit(NamedTuple):
    a: float
    t1: float
    p: float


def exponential_decay(x, amplitude, rate):
    return amplitude * np.exp(-rate * x)


def stretched_decay(x, amplitude, lifetime, exponent):
    return amplitude * np.exp(-((x / lifetime) ** exponent))


def _scaled(series: TemperatureSeries, minimum_points: int):
    if series.n_points < minimum_points:
        raise InsufficientDataError(f"fit needs at least {minimum_points} points, got {series.n_points}.")
    x = series.delay_array
    y = series.amplitude_array
    x_scale = float(x.max()) or 1.0
    y_scale = float(np.max(np.abs(y))) or 1.0
    return x / x_scale, y / y_scale, x_scale, y_scale


def _check(result, what: str) -> None:
    if not result.success:
        raise ConvergenceError(f"{what} fit did not converge: {result.message}")


def fit_simple_exponential(series: TemperatureSeries) -> SimpleExponentialFit:
    """
    Fit A0 exp(-delay / T2) over the stored delay axis.

    Raises:
        InsufficientDataError: For fewer than 4 points.
        ConvergenceError: If the fit fails or the decay rate vanishes.
    """
    x, y, x_scale, y_scale = _scaled(series, 4)
    positive = y > 0
    rate0, amplitude0 = 1.0, float(y[0]) or 1.0
    if np.count_nonzero(positive) >= 2:
        slope, intercept = np.polyfit(x[positive], np.log(y[positive]), 1)
        rate0, amplitude0 = max(-slope, 10 * _MIN_RATE), float(np.exp(intercept))
    model = Model(exponential_decay)
    params = model.make_params(amplitude=amplitude0, rate=rate0)
    params["rate"].set(min=0.0)
    result = model.fit(y, params, x=x, method="least_squares", fit_kws=_FIT_KWS)
    _check(result, "exponential")
    rate = result.params["rate"].value
    if rate <= _MIN_RATE:
        raise ConvergenceError(f"no decay at T = {series.temperature} K: T2 is not bracketed by the data.")
    fit = SimpleExponentialFit(a0=result.params["amplitude"].value * y_scale, t2=x_scale / rate)
    logger.debug("exponential fit at %.4g K: %s", series.temperature, fit)
    return fit


def _stretched_start(x: np.ndarray, y: np.ndarray):
    amplitude = float(np.max(y))
    ratio = y / amplitude
    usable = (x > 0) & (ratio > 0) & (ratio < 1)
    if np.count_nonzero(usable) >= 2:
        slope, intercept = np.polyfit(np.log(x[usable]), np.log(-np.log(ratio[usable])), 1)
        exponent = float(np.clip(slope, 0.15, 1.95))
        return amplitude, float(np.exp(-intercept / slope)) if slope > 0 else float(np.mean(x)), exponent
    return amplitude, float(np.mean(x)) or 1.0, 1.0


def fit_stretched_exponential(series: TemperatureSeries) -> StretchedExponentialFit:
    """
    Fit A exp(-(t / T1)^p) with p in [0.1, 2].

    Raises:
        InsufficientDataError: For fewer than 6 points.
        ConvergenceError: If the fit fails.
    """
    x, y, x_scale, y_scale = _scaled(series, 6)
    amplitude0, lifetime0, exponent0 = _stretched_start(x, y)
    model = Model(stretched_decay)
    params = model.make_params(amplitude=amplitude0, lifetime=lifetime0, exponent=exponent0)
    params["lifetime"].set(min=1e-12)
    params["exponent"].set(min=_P_BOUNDS[0], max=_P_BOUNDS[1])
    result = model.fit(y, params, x=x, method="least_squares", fit_kws=_FIT_KWS)
    _check(result, "stretched exponential")
    fit = StretchedExponentialFit(
        a=result.params["amplitude"].value * y_scale,
        t1=result.params["lifetime"].value * x_scale,
        p=result.params["exponent"].value,
    )
    logger.debug("stretched fit at %.4g K: %s", series.temperature, fit)
    return fit


class SimpleT2Row(NamedTuple):
    temperature: float
    a0: float
    t2: float


class SimpleT1Row(NamedTuple):
    temperature: float
    a: float
    t1: float
    p: float


def simple_t2_table(dataset: DecayDataset) -> List[SimpleT2Row]:
    """Simple-exponential T2 of every series, the model-free comparison curve."""
    return [SimpleT2Row(s.temperature, *fit_simple_exponential(s)) for s in dataset.series]


def simple_t1_table(dataset: DecayDataset) -> List[SimpleT1Row]:
    return [SimpleT1Row(s.temperature, *fit_stretched_exponential(s)) for s in dataset.series]
