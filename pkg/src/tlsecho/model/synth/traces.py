import logging
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from tlsecho.model.config import TRACE
from tlsecho.model.errors import DomainError
from tlsecho.model.trace.iq_trace import IQTrace
from tlsecho.model.utils import validate_float, validate_seed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SynthTraceSpec:
    """Gaussian echo of ``amplitude`` volts on quadratures rotated by ``phase``, plus white noise."""

    dt: float
    duration: float
    amplitude: float
    center: float
    width: float
    phase: float = 0.0
    noise_std_per_sample: float = 0.0
    n_traces: int = 1
    seed: int = 0
    t0: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "dt", validate_float(self.dt, "dt", minimum=0.0, strict=True))
        object.__setattr__(self, "width", validate_float(self.width, "width", minimum=0.0, strict=True))
        object.__setattr__(self, "amplitude", validate_float(self.amplitude, "amplitude"))
        object.__setattr__(self, "center", validate_float(self.center, "center"))
        object.__setattr__(self, "phase", validate_float(self.phase, "phase"))
        object.__setattr__(
            self, "noise_std_per_sample", validate_float(self.noise_std_per_sample, "noise_std_per_sample", 0.0)
        )
        object.__setattr__(self, "seed", validate_seed(self.seed))
        if self.n_traces < 1:
            raise DomainError(f"n_traces must be >= 1, got {self.n_traces}.")
        end = self.t0 + validate_float(self.duration, "duration", minimum=0.0, strict=True)
        half = TRACE.window_sigmas * self.width
        if end < self.center + half or self.t0 > self.center - half:
            raise DomainError(
                f"the trace [{self.t0}, {end}] s must cover the echo centre +/- {TRACE.window_sigmas:g} widths."
            )

    @property
    def n_samples(self) -> int:
        return int(math.floor(self.duration / self.dt + 1e-9)) + 1


def _projection(angle: float, which) -> float:
    value = which(angle)
    # cos(pi/2) and sin(pi) are not exactly 0 in floating point
    return 0.0 if abs(value) < 1e-15 else value


def generate_trace_set(spec: SynthTraceSpec) -> List[IQTrace]:
    """``n_traces`` traces: I = A cos(phase) g(t) + noise, Q = A sin(phase) g(t) + noise."""
    rng = np.random.default_rng(spec.seed)
    times = spec.t0 + spec.dt * np.arange(spec.n_samples)
    envelope = spec.amplitude * np.exp(-0.5 * ((times - spec.center) / spec.width) ** 2)
    i_clean = _projection(spec.phase, math.cos) * envelope
    q_clean = _projection(spec.phase, math.sin) * envelope
    traces = []
    for _ in range(spec.n_traces):
        i_samples, q_samples = i_clean, q_clean
        if spec.noise_std_per_sample > 0.0:
            noise = rng.normal(0.0, spec.noise_std_per_sample, size=(2, spec.n_samples))
            i_samples, q_samples = i_clean + noise[0], q_clean + noise[1]
        traces.append(IQTrace(spec.dt, spec.t0, i_samples, q_samples))
    logger.info("Generated %d traces of %d samples", spec.n_traces, spec.n_samples)
    return traces
