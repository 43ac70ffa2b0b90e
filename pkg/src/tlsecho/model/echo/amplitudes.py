import numpy as np

from tlsecho.model.echo.kernels import alpha_kernel, beta_kernel, gamma_sd, jump_rate
from tlsecho.model.echo.parameters import ModelVariant, SpectralDiffusionParams
from tlsecho.model.utils import as_output, validate_array, validate_float


def intrinsic_gamma2(params: SpectralDiffusionParams, variant: ModelVariant, temperature):
    """Intrinsic dephasing rate Gamma_2(T), rad/s."""
    variant = ModelVariant(variant)
    params.check_variant(variant)
    temps = validate_array(temperature, "temperature", minimum=0.0, strict=True)
    if variant is ModelVariant.BASE_INTRINSIC:
        return as_output(temperature, np.full_like(temps, params.gamma2))
    return as_output(temperature, 0.5 * params.w_ex * temps + params.gamma2_star)


def intrinsic_gamma1(params: SpectralDiffusionParams, variant: ModelVariant, temperature):
    """
    Intrinsic relaxation rate Gamma_1(T), rad/s.

    The intrinsic channel is assumed to set the dephasing alone, so Gamma_1 = 2 Gamma_2
    in the base variant and Gamma_1* = 2 Gamma_2* in the refined one.
    """
    return 2.0 * intrinsic_gamma2(params, variant, temperature)


def hahn_amplitude(params: SpectralDiffusionParams, variant: ModelVariant, a0: float, tau, temperature):
    """
    Two-pulse echo amplitude A0 e^(-2 Gamma_2(T) tau) e^(-Gamma_sd(T) alpha(2 tau, W(T))).

    ``tau`` is the pulse separation, half the delay to the echo. ``tau`` and
    ``temperature`` broadcast against each other.
    """
    a0 = validate_float(a0, "a0")
    tau_array = validate_array(tau, "tau", minimum=0.0)
    temps = validate_array(temperature, "temperature", minimum=0.0, strict=True)
    gamma2 = intrinsic_gamma2(params, variant, temps)
    exponent = 2.0 * gamma2 * tau_array + gamma_sd(params, temps) * alpha_kernel(tau_array, jump_rate(params, temps))
    value = a0 * np.exp(-exponent)
    if np.ndim(tau) == 0 and np.ndim(temperature) == 0:
        return float(value)
    return value


def stimulated_amplitude(
    params: SpectralDiffusionParams,
    variant: ModelVariant,
    a0_se: float,
    tau,
    tau_prime,
    temperature,
    literal_gamma_sd0: bool = False,
):
    """
    Three-pulse echo amplitude A0se e^(-Gamma_1(T) tau') e^(-G beta(tau, tau', W(T))).

    G is Gamma_sd(T), consistent with the Hahn model; ``literal_gamma_sd0`` uses the
    high-temperature Gamma_sd0 instead.
    """
    a0_se = validate_float(a0_se, "a0_se")
    tau_array = validate_array(tau, "tau", minimum=0.0)
    tau_prime_array = validate_array(tau_prime, "tau_prime", minimum=0.0)
    temps = validate_array(temperature, "temperature", minimum=0.0, strict=True)
    gamma1 = intrinsic_gamma1(params, variant, temps)
    diffusion = params.gamma_sd0 if literal_gamma_sd0 else gamma_sd(params, temps)
    beta = beta_kernel(tau_array, tau_prime_array, jump_rate(params, temps))
    value = a0_se * np.exp(-(gamma1 * tau_prime_array + diffusion * beta))
    if np.ndim(tau) == 0 and np.ndim(tau_prime) == 0 and np.ndim(temperature) == 0:
        return float(value)
    return value


def stretched_exponential(a: float, t, t1: float, p: float):
    """A exp(-(t / T1)^p)."""
    t1 = validate_float(t1, "t1", minimum=0.0, strict=True)
    p = validate_float(p, "p", minimum=0.0, strict=True, maximum=2.0)
    times = validate_array(t, "t", minimum=0.0)
    return as_output(t, a * np.exp(-((times / t1) ** p)))


def hahn_curve(params: SpectralDiffusionParams, variant: ModelVariant, a0: float, delays, temperature: float):
    """Hahn amplitudes over a grid of delays 2 tau at one temperature."""
    delays = validate_array(delays, "delays", minimum=0.0)
    return np.asarray(hahn_amplitude(params, variant, a0, 0.5 * delays, temperature), dtype=float)


def stimulated_curve(
    params: SpectralDiffusionParams,
    variant: ModelVariant,
    a0_se: float,
    tau: float,
    tau_primes,
    temperature: float,
    literal_gamma_sd0: bool = False,
):
    tau_primes = validate_array(tau_primes, "tau_primes", minimum=0.0)
    return np.asarray(
        stimulated_amplitude(params, variant, a0_se, tau, tau_primes, temperature, literal_gamma_sd0), dtype=float
    )
