"""Radiative rate, dipole moment and TLS density from echo calibration data."""
import math
from dataclasses import dataclass, fields
from typing import NamedTuple

import numpy as np

from tlsecho.model.echo.constants import CONSTANTS
from tlsecho.model.utils import validate_array, validate_float


@dataclass(frozen=True)
class EchoCalibration:
    """
    Drive and detection calibration of a two-pulse echo.

    ``theta`` is the first-pulse length, which sets the excited bandwidth
    gamma_A = 2 pi / theta. ``field_per_sqrt_watt`` converts input power into the
    driving field on the capacitor and has to be supplied by the user.
    """

    p_in: float
    omega_d: float
    theta: float
    alpha_out: float
    field_per_sqrt_watt: float
    volume: float = 1.5e-13

    def __post_init__(self):
        for field in fields(self):
            minimum_strict = field.name != "alpha_out"
            value = validate_float(getattr(self, field.name), field.name, minimum=0.0, strict=minimum_strict)
            object.__setattr__(self, field.name, value)

    @property
    def excited_bandwidth(self) -> float:
        return 2.0 * math.pi / self.theta

    @property
    def driving_field(self) -> float:
        return self.field_per_sqrt_watt * math.sqrt(self.p_in)


class DipoleEstimate(NamedTuple):
    si: float
    debye: float


def rabi_rate(gamma_r, p_in, omega_d):
    """Rabi rate Omega = 2 sqrt(Gamma_R P_in / (hbar omega_d)), rad/s."""
    rates = validate_array(gamma_r, "gamma_r", minimum=0.0)
    power = validate_array(p_in, "p_in", minimum=0.0)
    omega_d = validate_float(omega_d, "omega_d", minimum=0.0, strict=True)
    value = 2.0 * np.sqrt(rates * power / (CONSTANTS.hbar * omega_d))
    if np.ndim(gamma_r) == 0 and np.ndim(p_in) == 0:
        return float(value)
    return value


def radiative_rate_from_pi_pulse(theta: float, p_in: float, omega_d: float) -> float:
    """Gamma_R for which a pulse of length ``theta`` at ``p_in`` is a pi pulse: (pi/theta)^2 hbar omega_d / (4 P_in)."""
    theta = validate_float(theta, "theta", minimum=0.0, strict=True)
    p_in = validate_float(p_in, "p_in", minimum=0.0, strict=True)
    omega_d = validate_float(omega_d, "omega_d", minimum=0.0, strict=True)
    return (math.pi / theta) ** 2 * CONSTANTS.hbar * omega_d / (4.0 * p_in)


def dipole_from_rabi(omega_rabi: float, e_field: float) -> DipoleEstimate:
    """Dipole moment d_A = hbar Omega / E_d."""
    omega_rabi = validate_float(omega_rabi, "omega_rabi", minimum=0.0)
    e_field = validate_float(e_field, "e_field", minimum=0.0, strict=True)
    dipole = CONSTANTS.hbar * omega_rabi / e_field
    return DipoleEstimate(si=dipole, debye=dipole / CONSTANTS.debye)


def density_from_echo(cal: EchoCalibration, gamma_r: float) -> float:
    """TLS density N0 = |alpha_out| / (V gamma_A sqrt(Gamma_R)), 1/(J m^3)."""
    gamma_r = validate_float(gamma_r, "gamma_r", minimum=0.0, strict=True)
    return cal.alpha_out / (cal.volume * cal.excited_bandwidth * math.sqrt(gamma_r))
