"""
Event-driven telegraph-process integrals.

A telegraph function h(t) takes values +-1 and changes sign at Poisson times of rate W.
Segments are integrated exactly between flips, so the estimates carry no
discretization bias.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from tlsecho.model.config import MONTE_CARLO
from tlsecho.model.errors import DomainError
from tlsecho.model.utils import chunk_bounds, ordered_map, substream, validate_float, validate_seed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TelegraphConfig:
    w: float
    tau: float
    tau_prime: float = 0.0
    n_histories: int = 100_000
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "w", validate_float(self.w, "w", minimum=0.0))
        object.__setattr__(self, "tau", validate_float(self.tau, "tau", minimum=0.0))
        object.__setattr__(self, "tau_prime", validate_float(self.tau_prime, "tau_prime", minimum=0.0))
        object.__setattr__(self, "seed", validate_seed(self.seed))
        if int(self.n_histories) != self.n_histories or self.n_histories < 1:
            raise DomainError(f"n_histories must be a positive integer, got {self.n_histories}.")
        object.__setattr__(self, "n_histories", int(self.n_histories))


def segment_integrals(
    rng: np.random.Generator, length: float, w: float, signs: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Integrate independent telegraph processes over [0, length].

    Args:
        rng: Source of the exponential waiting times.
        length (float): Segment duration in seconds.
        w (float): Flip rate in 1/s, > 0.
        signs (np.ndarray): Value of each process at the segment start.

    Returns:
        Tuple of the integrals and the values at the segment end.
    """
    signs = signs.astype(float)
    integrals = np.zeros(signs.shape)
    elapsed = np.zeros(signs.shape)
    pending = np.arange(signs.size)
    while pending.size:
        remaining = length - elapsed[pending]
        expected = w * float(remaining.max())
        width = int(math.ceil(expected + 6.0 * math.sqrt(expected) + 10.0))
        flips = np.cumsum(rng.exponential(1.0 / w, size=(pending.size, width)), axis=1)
        clipped = np.minimum(flips, remaining[:, None])
        pieces = np.diff(clipped, axis=1, prepend=0.0)
        alternating = np.where(np.arange(width) % 2 == 0, 1.0, -1.0)
        integrals[pending] += signs[pending] * (pieces @ alternating)
        n_flips = np.count_nonzero(flips < remaining[:, None], axis=1)
        signs[pending] *= np.where(n_flips % 2 == 0, 1.0, -1.0)
        elapsed[pending] += clipped[:, -1]
        pending = pending[flips[:, -1] < remaining]
    return integrals, signs


def echo_phase_integrals(rng: np.random.Generator, count: int, w: float, tau: float, tau_prime: float) -> np.ndarray:
    """
    Signed refocused integrals int_0^tau h - int_(tau+tau')^(2tau+tau') h of ``count`` processes.

    The waiting interval tau' only matters through the parity of its flips, which is
    drawn directly: P(odd) = (1 - e^(-2W tau')) / 2.
    """
    signs = np.where(rng.integers(0, 2, size=count) == 0, 1.0, -1.0)
    first, signs = segment_integrals(rng, tau, w, signs)
    if tau_prime > 0.0:
        odd_probability = -0.5 * math.expm1(-2.0 * w * tau_prime)
        signs = np.where(rng.random(count) < odd_probability, -signs, signs)
    second, _ = segment_integrals(rng, tau, w, signs)
    return first - second


def flip_history_average(
    cfg: TelegraphConfig, workers: Optional[int] = None, chunk_size: Optional[int] = None
) -> Tuple[float, float]:
    """
    Monte Carlo estimate of the flip-history average and its standard error, in seconds.

    Histories are processed in fixed-size chunks with one random substream per chunk,
    so the result depends on the seed only, never on the worker count.
    """
    if cfg.w == 0.0 or cfg.tau == 0.0:
        return 0.0, 0.0
    chunk_size = chunk_size or MONTE_CARLO.history_chunk

    def run_chunk(indices: range) -> np.ndarray:
        rng = substream(cfg.seed, indices.start // chunk_size)
        return np.abs(echo_phase_integrals(rng, len(indices), cfg.w, cfg.tau, cfg.tau_prime))

    samples = np.concatenate(ordered_map(run_chunk, chunk_bounds(cfg.n_histories, chunk_size), workers))
    mean = float(samples.mean())
    if samples.size < 2:
        return mean, math.nan
    std_error = float(samples.std(ddof=1) / math.sqrt(samples.size))
    logger.debug("flip-history average over %d histories: %.6g +- %.2g s", samples.size, mean, std_error)
    return mean, std_error
