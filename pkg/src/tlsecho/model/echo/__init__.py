"""
Analytic echo-decay models: bath temperature dependence, flip-history kernels, Hahn
and stimulated echo amplitudes, and the model-implied T1 and T2.
"""
from .amplitudes import (
    hahn_amplitude,
    hahn_curve,
    intrinsic_gamma1,
    intrinsic_gamma2,
    stimulated_amplitude,
    stimulated_curve,
    stretched_exponential,
)
from .constants import CONSTANTS, PhysicalConstants
from .extraction import t1_curve, t1_of_model, t2_curve, t2_of_model
from .kernels import (
    alpha_kernel,
    beta_kernel,
    dipolar_gamma_sd,
    gamma_sd,
    gamma_sd_high_temperature,
    gamma_sd_low_temperature,
    jump_rate,
    jump_rate_high_temperature_asymptote,
    jump_rate_low_temperature,
    thermal_argument,
)
from .parameters import ModelVariant, SpectralDiffusionParams, TlsLevel
from .presets import PRESET_NAMES, preset, preset_spread

__all__ = [
    "CONSTANTS",
    "PhysicalConstants",
    "ModelVariant",
    "SpectralDiffusionParams",
    "TlsLevel",
    "thermal_argument",
    "gamma_sd",
    "jump_rate",
    "gamma_sd_high_temperature",
    "gamma_sd_low_temperature",
    "jump_rate_low_temperature",
    "jump_rate_high_temperature_asymptote",
    "dipolar_gamma_sd",
    "alpha_kernel",
    "beta_kernel",
    "intrinsic_gamma1",
    "intrinsic_gamma2",
    "hahn_amplitude",
    "stimulated_amplitude",
    "stretched_exponential",
    "hahn_curve",
    "stimulated_curve",
    "t2_of_model",
    "t1_of_model",
    "t2_curve",
    "t1_curve",
    "PRESET_NAMES",
    "preset",
    "preset_spread",
]
