"""
Default physical, instrument and numerical settings.

Every default lives in a frozen dataclass; operations take keyword arguments that
override these values per call.
"""
import math
from dataclasses import dataclass
from typing import Tuple

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class DielectricDefaults:
    epsilon_r: float = 2.5
    gamma_b_over_omega_b: float = 1.0


@dataclass(frozen=True)
class ChainDefaults:
    n_cells: int = 2037
    total_gain: float = 120.3
    capacitance: float = 39e-15
    z0: float = 50.0
    omega: float = TWO_PI * 7e9
    quantum_noise: float = 0.5
    capacitance_band: Tuple[float, float] = (20e-15, 60e-15)
    band_points: int = 5


@dataclass(frozen=True)
class FitDefaults:
    rate_bounds: Tuple[float, float] = (TWO_PI * 0.1, TWO_PI * 1e8)
    omega_b_bounds: Tuple[float, float] = (TWO_PI * 0.1e9, TWO_PI * 20e9)
    w_ex_bounds: Tuple[float, float] = (TWO_PI * 0.1, TWO_PI * 1e8)
    n_starts: int = 8
    jitter_decades: float = 0.5
    tolerance: float = 1e-12
    max_nfev: int = 2000
    condition_limit: float = 1e10
    n_resamples: int = 400
    subset_size: int = 18
    seed: int = 0


@dataclass(frozen=True)
class MonteCarloDefaults:
    history_chunk: int = 4096
    rows_per_chunk: int = 65536
    r_min: float = 1e-9
    rabi_samples: int = 10000


@dataclass(frozen=True)
class TraceDefaults:
    window_sigmas: float = 5.0
    min_snr: float = 2.0
    min_noise_traces: int = 50
    histogram_tolerance: float = 0.1
    phase_search: float = math.pi / 4


DIELECTRIC = DielectricDefaults()
CHAIN = ChainDefaults()
FIT = FitDefaults()
MONTE_CARLO = MonteCarloDefaults()
TRACE = TraceDefaults()
