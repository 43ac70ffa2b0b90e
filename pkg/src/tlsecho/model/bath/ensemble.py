import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from tlsecho.model.bath.telegraph import echo_phase_integrals
from tlsecho.model.config import MONTE_CARLO
from tlsecho.model.echo import CONSTANTS, alpha_kernel, dipolar_gamma_sd
from tlsecho.model.errors import DomainError
from tlsecho.model.utils import chunk_bounds, ordered_map, substream, validate_float, validate_seed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BathEnsemble:
    """
    Randomized dipolar bath of ``n_b`` flipping TLSs around a probed TLS.

    Positions fill the spherical shell between ``r_min`` and ``r_max`` uniformly, with
    ``r_max`` fixed by the density: the shell holds ``n_b`` dipoles at ``c_b``.
    """

    c_b: float
    d_a: float
    d_b: float
    epsilon: float
    n_b: int
    r_min: float = MONTE_CARLO.r_min
    seed: int = 0

    def __post_init__(self):
        for name in ("c_b", "d_a", "d_b", "epsilon", "r_min"):
            object.__setattr__(self, name, validate_float(getattr(self, name), name, minimum=0.0, strict=True))
        if int(self.n_b) != self.n_b or self.n_b < 1:
            raise DomainError(f"n_b must be a positive integer, got {self.n_b}.")
        object.__setattr__(self, "n_b", int(self.n_b))
        object.__setattr__(self, "seed", validate_seed(self.seed))

    @property
    def r_max(self) -> float:
        return (self.r_min ** 3 + 3.0 * self.n_b / (4.0 * math.pi * self.c_b)) ** (1.0 / 3.0)

    @property
    def gamma_sd(self) -> float:
        """Diffusion rate the mean-field law predicts for this bath, rad/s."""
        return dipolar_gamma_sd(self.d_a, self.d_b, self.c_b, self.epsilon)

    def couplings(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Draw ``count`` x ``n_b`` angular couplings (1 - 3 cos^2 theta) d_A d_B / (4 pi epsilon hbar r^3)."""
        r_cubed = rng.uniform(self.r_min ** 3, self.r_max ** 3, size=(count, self.n_b))
        cos_theta = rng.uniform(-1.0, 1.0, size=(count, self.n_b))
        strength = self.d_a * self.d_b / (4.0 * math.pi * self.epsilon * CONSTANTS.hbar)
        return strength * (1.0 - 3.0 * cos_theta ** 2) / r_cubed


def ensemble_echo(
    bath: BathEnsemble,
    w: float,
    tau: float,
    n_realizations: int,
    workers: Optional[int] = None,
) -> Tuple[float, float]:
    """
    Echo amplitude Re<exp(i sum_k C_k X_k)> averaged over bath draws and flip histories.

    X_k is the refocused telegraph integral of dipole k. Returns the amplitude and its
    standard error.
    """
    w = validate_float(w, "w", minimum=0.0)
    tau = validate_float(tau, "tau", minimum=0.0)
    if int(n_realizations) != n_realizations or n_realizations < 1:
        raise DomainError(f"n_realizations must be a positive integer, got {n_realizations}.")
    if w == 0.0 or tau == 0.0:
        return 1.0, 0.0
    chunk_size = max(1, MONTE_CARLO.rows_per_chunk // bath.n_b)

    def run_chunk(indices: range) -> np.ndarray:
        rng = substream(bath.seed, indices.start // chunk_size)
        count = len(indices)
        couplings = bath.couplings(rng, count)
        integrals = echo_phase_integrals(rng, count * bath.n_b, w, tau, 0.0).reshape(count, bath.n_b)
        return np.cos(np.sum(couplings * integrals, axis=1))

    samples = np.concatenate(ordered_map(run_chunk, chunk_bounds(int(n_realizations), chunk_size), workers))
    amplitude = float(samples.mean())
    std_error = float(samples.std(ddof=1) / math.sqrt(samples.size)) if samples.size > 1 else math.nan
    logger.debug("ensemble echo over %d realizations: %.6g +- %.2g", samples.size, amplitude, std_error)
    return amplitude, std_error


def predicted_decay_exponent(bath: BathEnsemble, w: float, tau: float) -> float:
    """Mean-field exponent Gamma_sd alpha(2 tau, W) that -ln(amplitude) should approach."""
    return bath.gamma_sd * float(alpha_kernel(tau, w))
