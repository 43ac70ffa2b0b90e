"""Gaussian fit of a single echo pulse on one quadrature."""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from tlsecho.model.config import TRACE
from tlsecho.model.errors import FitFailure
from tlsecho.model.trace.iq_trace import IQTrace, Quadrature

logger = logging.getLogger(__name__)

_FWHM_PER_SIGMA = 2.0 * math.sqrt(2.0 * math.log(2.0))
_MAD_TO_SIGMA = 1.4826
_MAX_NFEV = 2000


@dataclass(frozen=True)
class GaussianPulseFit:
    amplitude: float
    center: float
    width: float
    offset: float
    residual_rms: float


def _gaussian(params: np.ndarray, x: np.ndarray) -> np.ndarray:
    amplitude, center, width, offset = params
    return amplitude * np.exp(-0.5 * ((x - center) / width) ** 2) + offset


def _jacobian(params: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    amplitude, center, width, _ = params
    shifted = (x - center) / width
    bump = np.exp(-0.5 * shifted ** 2)
    return np.column_stack(
        (bump, amplitude * bump * shifted / width, amplitude * bump * shifted ** 2 / width, np.ones_like(x))
    )


def _half_max_width(deviation: np.ndarray, peak: int) -> float:
    """Full width at half maximum around ``peak``, in samples."""
    half = 0.5 * abs(deviation[peak])
    above = np.abs(deviation) >= half
    left = peak
    while left > 0 and above[left - 1]:
        left -= 1
    right = peak
    while right < deviation.size - 1 and above[right + 1]:
        right += 1
    return float(right - left + 1)


def fit_gaussian_pulse(trace: IQTrace, quadrature: Quadrature = Quadrature.I) -> GaussianPulseFit:
    """
    Least-squares fit of A exp(-(t - mu)^2 / (2 sigma^2)) + c to one quadrature.

    The fit runs in sample units with the data scaled to the initial peak height, so
    the optimizer sees parameters of order one.

    Raises:
        FitFailure: If the peak SNR is below 2 or the optimizer does not converge.
    """
    y = trace.quadrature(quadrature)
    offset0 = float(np.median(y))
    deviation = y - offset0
    peak = int(np.argmax(np.abs(deviation)))
    height = float(deviation[peak])
    noise = _MAD_TO_SIGMA * float(np.median(np.abs(np.diff(y)))) / math.sqrt(2.0)
    if height == 0.0 or (noise > 0.0 and abs(height) / noise < TRACE.min_snr):
        raise FitFailure(f"no pulse on quadrature {Quadrature(quadrature).value}: peak SNR below {TRACE.min_snr}.")

    x = np.arange(trace.n_samples, dtype=float)
    scale = abs(height)
    scaled = y / scale
    width0 = max(_half_max_width(deviation, peak) / _FWHM_PER_SIGMA, 0.5)
    start = np.array([height / scale, float(peak), width0, offset0 / scale])
    lower = np.array([-np.inf, 0.0, 0.05, -np.inf])
    upper = np.array([np.inf, float(trace.n_samples - 1), float(trace.n_samples), np.inf])
    result = least_squares(
        lambda p: _gaussian(p, x) - scaled,
        start,
        jac=lambda p: _jacobian(p, x, scaled),
        bounds=(lower, upper),
        method="trf",
        ftol=1e-15,
        xtol=1e-15,
        gtol=1e-15,
        max_nfev=_MAX_NFEV,
    )
    if result.status <= 0:
        raise FitFailure(f"Gaussian fit on quadrature {Quadrature(quadrature).value} did not converge: {result.message}")

    amplitude, center, width, offset = result.x
    residual_rms = scale * math.sqrt(float(np.mean(result.fun ** 2)))
    fit = GaussianPulseFit(
        amplitude=float(amplitude * scale),
        center=float(trace.t0 + center * trace.dt),
        width=float(width * trace.dt),
        offset=float(offset * scale),
        residual_rms=residual_rms,
    )
    logger.debug("Gaussian fit on %s: %s", Quadrature(quadrature).value, fit)
    return fit
