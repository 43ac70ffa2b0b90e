import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from tlsecho.model.config import MONTE_CARLO
from tlsecho.model.errors import DomainError
from tlsecho.model.losses.rabi_calibration import rabi_rate
from tlsecho.model.utils import validate_array, validate_float, validate_seed


@dataclass(frozen=True)
class RabiConfig:
    """
    Two-pulse drive of a TLS ensemble whose radiative rates spread log-normally.

    ``coupling_spread`` is the relative standard deviation of Gamma_R around its mean
    ``gamma_r``; zero gives a single deterministic rate.
    """

    gamma_r: float
    pulse1_power: float
    pulse2_power: float
    theta: float
    omega_d: float
    coupling_spread: float = 0.0
    n_samples: int = MONTE_CARLO.rabi_samples
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "gamma_r", validate_float(self.gamma_r, "gamma_r", minimum=0.0))
        object.__setattr__(self, "pulse1_power", validate_float(self.pulse1_power, "pulse1_power", minimum=0.0))
        object.__setattr__(self, "pulse2_power", validate_float(self.pulse2_power, "pulse2_power", minimum=0.0))
        object.__setattr__(self, "theta", validate_float(self.theta, "theta", minimum=0.0, strict=True))
        object.__setattr__(self, "omega_d", validate_float(self.omega_d, "omega_d", minimum=0.0, strict=True))
        object.__setattr__(self, "coupling_spread", validate_float(self.coupling_spread, "coupling_spread", minimum=0.0))
        object.__setattr__(self, "seed", validate_seed(self.seed))
        if int(self.n_samples) != self.n_samples or self.n_samples < 1:
            raise DomainError(f"n_samples must be a positive integer, got {self.n_samples}.")

    def radiative_rates(self) -> np.ndarray:
        if self.coupling_spread == 0.0:
            return np.array([self.gamma_r])
        sigma = math.sqrt(math.log1p(self.coupling_spread ** 2))
        normal = np.random.default_rng(self.seed).standard_normal(int(self.n_samples))
        return self.gamma_r * np.exp(sigma * normal - 0.5 * sigma ** 2)


def _envelope(rates: np.ndarray, cfg: RabiConfig, pulse1_power) -> np.ndarray:
    omega1 = rabi_rate(rates, pulse1_power, cfg.omega_d)
    omega2 = rabi_rate(rates, cfg.pulse2_power, cfg.omega_d)
    return np.sin(omega1 * cfg.theta) * np.sin(0.5 * omega2 * cfg.theta) ** 2


def two_pulse_rabi_amplitude(cfg: RabiConfig) -> float:
    """Ensemble average of sin(Omega_1 theta) sin^2(Omega_2 theta / 2)."""
    return float(np.mean(_envelope(cfg.radiative_rates(), cfg, cfg.pulse1_power)))


def rabi_sweep(cfg: RabiConfig, powers: Sequence[float]) -> np.ndarray:
    """Two-pulse amplitude over a grid of first-pulse powers; one rate draw serves the whole sweep."""
    powers = validate_array(powers, "powers", minimum=0.0)
    rates = cfg.radiative_rates()
    return np.array([float(np.mean(_envelope(rates, cfg, power))) for power in powers.ravel()]).reshape(powers.shape)
