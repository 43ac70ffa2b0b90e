"""
Temperature dependence of the bath and the flip-history kernels.

``alpha_kernel`` and ``beta_kernel`` are the telegraph averages entering the Hahn and
stimulated echo exponents. Both broadcast over numpy arrays and are evaluated in
exp-scaled space, so W*tau up to 1e3 and beyond is safe.
"""
import math

import numpy as np

from tlsecho.model.echo.constants import CONSTANTS
from tlsecho.model.echo.parameters import SpectralDiffusionParams
from tlsecho.model.errors import DomainError
from tlsecho.model.specfun import bessel_i0e, bessel_i1e, coth, scaled_kernel_combination, sech2
from tlsecho.model.utils import as_output, validate_array, validate_float


def thermal_argument(omega_b: float, temperature):
    """hbar omega_B / (2 k_B T)."""
    temps = validate_array(temperature, "temperature", minimum=0.0, strict=True)
    return as_output(temperature, CONSTANTS.hbar * omega_b / (2.0 * CONSTANTS.k_b * temps))


def gamma_sd(params: SpectralDiffusionParams, temperature):
    """Spectral-diffusion rate Gamma_sd0 sech^2(hbar omega_B / 2 k_B T), rad/s."""
    return params.gamma_sd0 * sech2(thermal_argument(params.omega_b, temperature))


def jump_rate(params: SpectralDiffusionParams, temperature):
    """Bath flip rate W = Gamma_1^B coth(hbar omega_B / 2 k_B T), 1/s."""
    return params.gamma1_b * coth(thermal_argument(params.omega_b, temperature))


def gamma_sd_high_temperature(params: SpectralDiffusionParams) -> float:
    return params.gamma_sd0


def gamma_sd_low_temperature(params: SpectralDiffusionParams) -> float:
    return 0.0


def jump_rate_low_temperature(params: SpectralDiffusionParams) -> float:
    return params.gamma1_b


def jump_rate_high_temperature_asymptote(params: SpectralDiffusionParams, temperature):
    """Linear high-temperature form Gamma_1^B 2 k_B T / (hbar omega_B)."""
    return params.gamma1_b / thermal_argument(params.omega_b, temperature)


def dipolar_gamma_sd(d_a: float, d_b: float, c_b: float, epsilon: float) -> float:
    """High-temperature diffusion rate 2 pi d_A d_B c_B / (9 sqrt(3) hbar epsilon) of a dipolar bath."""
    d_a = validate_float(d_a, "d_a", minimum=0.0)
    d_b = validate_float(d_b, "d_b", minimum=0.0)
    c_b = validate_float(c_b, "c_b", minimum=0.0)
    epsilon = validate_float(epsilon, "epsilon", minimum=0.0, strict=True)
    return 2.0 * math.pi * d_a * d_b * c_b / (9.0 * math.sqrt(3.0) * CONSTANTS.hbar * epsilon)


def _kernel_inputs(**named):
    arrays = [validate_array(value, name, minimum=0.0) for name, value in named.items()]
    return np.broadcast_arrays(*arrays)


def alpha_kernel(tau, w):
    """
    Hahn flip-history average alpha(2 tau, W), in seconds.

    alpha = 2 e^(-2W tau) tau [I1(2W tau) + (pi/2)(I1 L0 - I0 L1)(2W tau)]. Grows like
    2 W tau^2 for W tau << 1 and like 2 sqrt(tau / (pi W)) for W tau >> 1.
    """
    tau_array, w_array = _kernel_inputs(tau=tau, w=w)
    x = 2.0 * w_array * tau_array
    bracket = bessel_i1e(x) + 0.5 * math.pi * scaled_kernel_combination(x)
    value = np.where(x == 0.0, 0.0, 2.0 * tau_array * bracket)
    template = tau if np.ndim(tau) else w
    return as_output(template, value)


def beta_kernel(tau, tau_prime, w):
    """
    Stimulated flip-history average beta(tau, tau', W), in seconds.

    beta = e^(-2W tau) tau [I0 + I1](2W tau) (1 - e^(-2W tau')) + alpha(2 tau, W)(1 + e^(-2W tau')) / 2,
    which reduces to alpha at tau' = 0.
    """
    tau_array, tau_prime_array, w_array = _kernel_inputs(tau=tau, tau_prime=tau_prime, w=w)
    x = 2.0 * w_array * tau_array
    alpha = np.asarray(alpha_kernel(tau_array, w_array), dtype=float)
    mixing = -np.expm1(-2.0 * w_array * tau_prime_array)
    persistent = tau_array * (bessel_i0e(x) + bessel_i1e(x)) * mixing
    value = persistent + 0.5 * alpha * (1.0 + np.exp(-2.0 * w_array * tau_prime_array))
    template = next((v for v in (tau, tau_prime, w) if np.ndim(v)), tau)
    return as_output(template, value)
