"""Model-implied T2 and T1: the delays at which the echo amplitude falls to 1/e."""
import logging
from typing import Callable, List

import numpy as np
from scipy.optimize import brentq

from tlsecho.model.echo.amplitudes import intrinsic_gamma1, intrinsic_gamma2
from tlsecho.model.echo.kernels import alpha_kernel, beta_kernel, gamma_sd, jump_rate
from tlsecho.model.echo.parameters import ModelVariant, SpectralDiffusionParams
from tlsecho.model.errors import ConvergenceError
from tlsecho.model.utils import validate_float

logger = logging.getLogger(__name__)

BRACKET_START = 1e-12
BRACKET_END = 1.0
_BRACKET_GROWTH = 2.0
_RTOL = 1e-12
_XTOL = 1e-24


def _first_crossing(log_excess: Callable[[float], float], what: str) -> float:
    """Root of a decreasing ``log_excess`` bracketed geometrically from 1e-12 s up to 1 s."""
    low = BRACKET_START
    if log_excess(low) <= 0.0:
        raise ConvergenceError(f"{what} is below the search bracket start {BRACKET_START} s.")
    high = low
    while True:
        high = min(high * _BRACKET_GROWTH, BRACKET_END)
        if log_excess(high) <= 0.0:
            break
        if high >= BRACKET_END:
            raise ConvergenceError(f"amplitude does not fall to 1/e within {BRACKET_END} s; {what} is not bracketed.")
        low = high
    root = brentq(log_excess, low, high, xtol=_XTOL, rtol=_RTOL, maxiter=500)
    logger.debug("%s = %.6g s", what, root)
    return root


def t2_of_model(params: SpectralDiffusionParams, variant: ModelVariant, temperature: float) -> float:
    """Delay 2 tau at which the Hahn amplitude reaches A0 / e."""
    temperature = validate_float(temperature, "temperature", minimum=0.0, strict=True)
    gamma2 = float(intrinsic_gamma2(params, variant, temperature))
    diffusion = float(gamma_sd(params, temperature))
    w = float(jump_rate(params, temperature))

    def log_excess(delay: float) -> float:
        tau = 0.5 * delay
        return 1.0 - 2.0 * gamma2 * tau - diffusion * float(alpha_kernel(tau, w))

    return _first_crossing(log_excess, "T2")


def t1_of_model(
    params: SpectralDiffusionParams,
    variant: ModelVariant,
    tau: float,
    temperature: float,
    literal_gamma_sd0: bool = False,
) -> float:
    """Waiting time tau' at which the stimulated amplitude falls to 1/e of its tau' = 0 value."""
    tau = validate_float(tau, "tau", minimum=0.0)
    temperature = validate_float(temperature, "temperature", minimum=0.0, strict=True)
    gamma1 = float(intrinsic_gamma1(params, variant, temperature))
    diffusion = params.gamma_sd0 if literal_gamma_sd0 else float(gamma_sd(params, temperature))
    w = float(jump_rate(params, temperature))
    alpha = float(alpha_kernel(tau, w))

    def log_excess(tau_prime: float) -> float:
        return 1.0 - gamma1 * tau_prime - diffusion * (float(beta_kernel(tau, tau_prime, w)) - alpha)

    return _first_crossing(log_excess, "T1")


def t2_curve(params: SpectralDiffusionParams, variant: ModelVariant, temperatures) -> List[float]:
    return [t2_of_model(params, variant, float(t)) for t in np.atleast_1d(temperatures)]


def t1_curve(
    params: SpectralDiffusionParams, variant: ModelVariant, tau: float, temperatures, literal_gamma_sd0: bool = False
) -> List[float]:
    return [t1_of_model(params, variant, tau, float(t), literal_gamma_sd0) for t in np.atleast_1d(temperatures)]
