"""
Matched-filter integration of echo traces.

The filter u(t) is a unit-area Gaussian centred on the mean echo time. An echo is
reduced to I_bar = sum u [I cos(phi) + Q sin(phi)] / sum u^2, with phi the filter
phase plus a small per-trace correction that cancels the orthogonal quadrature.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from tlsecho.model.config import TRACE
from tlsecho.model.errors import FitFailure, InsufficientDataError, WindowError
from tlsecho.model.trace.iq_trace import IQTrace, Quadrature
from tlsecho.model.trace.pulse_fit import GaussianPulseFit, fit_gaussian_pulse
from tlsecho.model.utils import validate_float

logger = logging.getLogger(__name__)

# quadrature fits weaker than this fraction of the strongest one carry no echo
_MIN_RELATIVE_AMPLITUDE = 0.1


def _wrap_phase(angle: float) -> float:
    """Map to (-pi, pi]."""
    wrapped = math.atan2(math.sin(angle), math.cos(angle))
    return math.pi if wrapped == -math.pi else wrapped


@dataclass(frozen=True)
class EchoFilter:
    mu_bar: float
    sigma_bar: float
    phi0: float

    def __post_init__(self):
        object.__setattr__(self, "mu_bar", validate_float(self.mu_bar, "mu_bar"))
        object.__setattr__(self, "sigma_bar", validate_float(self.sigma_bar, "sigma_bar", minimum=0.0, strict=True))
        object.__setattr__(self, "phi0", _wrap_phase(validate_float(self.phi0, "phi0")))

    @property
    def window(self) -> Tuple[float, float]:
        half = TRACE.window_sigmas * self.sigma_bar
        return self.mu_bar - half, self.mu_bar + half

    def weights(self, times: np.ndarray) -> np.ndarray:
        """u(t), a Gaussian of unit area."""
        return np.exp(-0.5 * ((times - self.mu_bar) / self.sigma_bar) ** 2) / (math.sqrt(2.0 * math.pi) * self.sigma_bar)


class EchoIntegral(NamedTuple):
    i_bar: float
    phi: float


class _WeightedSums(NamedTuple):
    i_sum: float
    q_sum: float
    norm: float


def _weighted_sums(trace: IQTrace, filt: EchoFilter) -> _WeightedSums:
    """
    Raises:
        WindowError: If the trace does not cover the filter window.
    """
    start, stop = filt.window
    times = trace.times
    if times[0] > start + trace.dt or times[-1] < stop - trace.dt:
        raise WindowError(
            f"filter window [{start:.6g}, {stop:.6g}] s lies outside the trace [{times[0]:.6g}, {times[-1]:.6g}] s."
        )
    inside = (times >= start) & (times <= stop)
    u = filt.weights(times[inside])
    return _WeightedSums(
        i_sum=float(np.dot(u, trace.i_samples[inside])),
        q_sum=float(np.dot(u, trace.q_samples[inside])),
        norm=float(np.dot(u, u)),
    )


def _in_phase(sums: _WeightedSums, phi: float) -> float:
    return (sums.i_sum * math.cos(phi) + sums.q_sum * math.sin(phi)) / sums.norm


def _out_of_phase(sums: _WeightedSums, phi: float) -> float:
    return (-sums.i_sum * math.sin(phi) + sums.q_sum * math.cos(phi)) / sums.norm


def strongest_traces(traces: Sequence[IQTrace], count: int = 3) -> List[IQTrace]:
    """The ``count`` traces with the highest peak |I + iQ|, strongest first."""
    order = sorted(range(len(traces)), key=lambda k: -float(np.max(np.abs(traces[k].complex_samples))))
    return [traces[k] for k in order[:count]]


def build_filter(traces: Sequence[IQTrace]) -> EchoFilter:
    """
    Filter from the strongest echoes (normally three): mean centre and width of the
    per-quadrature Gaussian fits, and the phase of the summed complex samples.

    Raises:
        InsufficientDataError: If no trace is given.
        FitFailure: If no quadrature of any trace holds a fittable pulse.
    """
    if not traces:
        raise InsufficientDataError("build_filter needs at least one trace.")
    fits: List[GaussianPulseFit] = []
    for index, trace in enumerate(traces):
        for quadrature in Quadrature:
            try:
                fits.append(fit_gaussian_pulse(trace, quadrature))
            except FitFailure as error:
                logger.debug("trace %d: %s", index, error)
    if not fits:
        raise FitFailure("no quadrature of the filter traces holds a fittable echo.")
    strongest = max(abs(fit.amplitude) for fit in fits)
    fits = [fit for fit in fits if abs(fit.amplitude) >= _MIN_RELATIVE_AMPLITUDE * strongest]
    total = complex(sum(complex(np.sum(trace.complex_samples)) for trace in traces))
    filt = EchoFilter(
        mu_bar=float(np.mean([fit.center for fit in fits])),
        sigma_bar=float(np.mean([fit.width for fit in fits])),
        phi0=cmath.phase(total),
    )
    logger.info(
        "Filter from %d traces (%d fits): mu=%.6g s, sigma=%.6g s, phi0=%.4f rad",
        len(traces),
        len(fits),
        filt.mu_bar,
        filt.sigma_bar,
        filt.phi0,
    )
    return filt


def integrate_echo(trace: IQTrace, filt: EchoFilter) -> EchoIntegral:
    """
    Weighted echo integral I_bar in V*s and the phase it was taken at.

    The phase is phi0 + delta, with delta in (-pi/4, pi/4) minimizing Q_bar^2.
    """
    sums = _weighted_sums(trace, filt)
    bound = TRACE.phase_search
    search = minimize_scalar(
        lambda delta: _out_of_phase(sums, filt.phi0 + delta) ** 2,
        bounds=(-bound, bound),
        method="bounded",
        options={"xatol": 1e-13},
    )
    delta = float(search.x)
    if bound - abs(delta) < 1e-6:
        logger.warning("Phase correction pinned at %.4f rad; the echo phase is far from phi0.", delta)
    phi = filt.phi0 + delta
    return EchoIntegral(i_bar=_in_phase(sums, phi), phi=_wrap_phase(phi))


def integrate_at_phase(trace: IQTrace, filt: EchoFilter, phi: float) -> float:
    """I_bar at a fixed phase, without the per-trace correction."""
    return _in_phase(_weighted_sums(trace, filt), phi)


def quadrature_residual(trace: IQTrace, filt: EchoFilter, phi: float) -> float:
    """Q_bar, the weighted integral of the quadrature orthogonal to ``phi``."""
    return _out_of_phase(_weighted_sums(trace, filt), phi)
