"""Published rate sets of devices D2 and D3, quoted as X/2pi, with their bootstrap spreads."""
from typing import Dict, Tuple

from tlsecho.model.echo.parameters import ModelVariant, SpectralDiffusionParams

_QUOTED = {
    "D2": (
        ModelVariant.BASE_INTRINSIC,
        dict(gamma2=50e3, gamma_sd0=743e3, gamma1_b=146e3, omega_b=1.9e9),
        dict(gamma2=2e3, gamma_sd0=87e3, gamma1_b=19e3, omega_b=0.1e9),
    ),
    "D3": (
        ModelVariant.BASE_INTRINSIC,
        dict(gamma2=52e3, gamma_sd0=831e3, gamma1_b=165e3, omega_b=2.0e9),
        dict(gamma2=2e3, gamma_sd0=76e3, gamma1_b=17e3, omega_b=0.1e9),
    ),
    "D2-refined": (
        ModelVariant.REFINED_TEMPERATURE_DEPENDENT,
        dict(gamma2_star=32e3, gamma_sd0=468e3, gamma1_b=161e3, w_ex=2.9e6, omega_b=2.3e9),
        dict(gamma2_star=3e3, gamma_sd0=34e3, gamma1_b=16e3, w_ex=0.4e6, omega_b=0.2e9),
    ),
    "D3-refined": (
        ModelVariant.REFINED_TEMPERATURE_DEPENDENT,
        dict(gamma2_star=33e3, gamma_sd0=586e3, gamma1_b=187e3, w_ex=3.0e6, omega_b=2.4e9),
        dict(gamma2_star=2e3, gamma_sd0=46e3, gamma1_b=19e3, w_ex=0.4e6, omega_b=0.2e9),
    ),
}

PRESET_NAMES = tuple(_QUOTED)


def preset(name: str) -> Tuple[SpectralDiffusionParams, ModelVariant]:
    """Parameters and variant of a named device; ``KeyError`` lists the known names."""
    if name not in _QUOTED:
        raise KeyError(f"Unknown preset '{name}'. Known presets: {', '.join(PRESET_NAMES)}.")
    variant, quoted, _ = _QUOTED[name]
    return SpectralDiffusionParams.from_over_2pi(**quoted), variant


def preset_spread(name: str) -> Dict[str, float]:
    """Quoted bootstrap standard deviations (X/2pi units) of a named device."""
    return dict(_QUOTED[name][2])
