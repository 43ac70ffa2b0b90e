import math
from dataclasses import dataclass

from tlsecho.model.config import DIELECTRIC
from tlsecho.model.echo.constants import CONSTANTS
from tlsecho.model.utils import validate_float


@dataclass(frozen=True)
class DielectricSpec:
    """Relative permittivity of the capacitor dielectric and the assumed bath width ratio gamma_B / omega_B."""

    epsilon_r: float = DIELECTRIC.epsilon_r
    gamma_b_over_omega_b: float = DIELECTRIC.gamma_b_over_omega_b

    def __post_init__(self):
        object.__setattr__(self, "epsilon_r", validate_float(self.epsilon_r, "epsilon_r", minimum=1.0))
        object.__setattr__(
            self,
            "gamma_b_over_omega_b",
            validate_float(self.gamma_b_over_omega_b, "gamma_b_over_omega_b", minimum=0.0, strict=True),
        )

    @property
    def permittivity(self) -> float:
        return self.epsilon_r * CONSTANTS.epsilon0


def tan_delta_from_spectral_diffusion(gamma_sd0: float, omega_b: float, ratio: float = 1.0) -> float:
    """Loss tangent 6 sqrt(3) pi Gamma_sd0 / (ratio omega_B), with ratio = gamma_B / omega_B."""
    gamma_sd0 = validate_float(gamma_sd0, "gamma_sd0", minimum=0.0)
    omega_b = validate_float(omega_b, "omega_b", minimum=0.0, strict=True)
    ratio = validate_float(ratio, "ratio", minimum=0.0, strict=True)
    return 6.0 * math.sqrt(3.0) * math.pi * gamma_sd0 / (ratio * omega_b)


def tan_delta_from_density(n0: float, d_a: float, dielectric: DielectricSpec = DielectricSpec()) -> float:
    """Zero-temperature loss tangent (4 pi^2 / 3 epsilon) N0 d_A^2."""
    n0 = validate_float(n0, "n0", minimum=0.0)
    d_a = validate_float(d_a, "d_a", minimum=0.0, strict=True)
    return 4.0 * math.pi ** 2 / (3.0 * dielectric.permittivity) * n0 * d_a ** 2


def density_from_concentration(c_b: float, omega_b: float, dielectric: DielectricSpec = DielectricSpec()) -> float:
    """Spectral density N0 = c_B / (hbar gamma_B) of TLSs, 1/(J m^3)."""
    c_b = validate_float(c_b, "c_b", minimum=0.0)
    omega_b = validate_float(omega_b, "omega_b", minimum=0.0, strict=True)
    return c_b / (CONSTANTS.hbar * dielectric.gamma_b_over_omega_b * omega_b)
