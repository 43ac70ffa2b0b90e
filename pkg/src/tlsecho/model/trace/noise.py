import logging
import math
from typing import Sequence, Tuple

import numpy as np
from scipy.integrate import trapezoid
from scipy.optimize import curve_fit

from tlsecho.model.config import TRACE
from tlsecho.model.errors import GridMismatchError, InsufficientDataError, WindowError
from tlsecho.model.trace.echo_filter import EchoFilter, integrate_at_phase
from tlsecho.model.trace.iq_trace import IQTrace, require_common_grid

logger = logging.getLogger(__name__)


def _gaussian_counts(x, height, center, sigma):
    return height * np.exp(-0.5 * ((x - center) / sigma) ** 2)


def histogram_sigma(values: np.ndarray) -> float:
    """Width of a Gaussian fitted to the histogram of ``values``."""
    counts, edges = np.histogram(values, bins="auto")
    centers = 0.5 * (edges[:-1] + edges[1:])
    start = (float(counts.max()), float(np.mean(values)), float(np.std(values)))
    params, _ = curve_fit(_gaussian_counts, centers, counts, p0=start, maxfev=5000)
    return abs(float(params[2]))


def estimate_integration_noise(
    traces: Sequence[IQTrace], filt: EchoFilter, min_traces: int = TRACE.min_noise_traces
) -> float:
    """
    Spread of I_bar over echo-free traces, in V*s.

    Each trace is integrated at the fixed filter phase phi0. The spread comes from a
    Gaussian fit to the histogram; when it disagrees with the sample standard deviation
    by more than 10 % the sample value is returned instead.

    Raises:
        InsufficientDataError: If fewer than ``min_traces`` traces are given.
    """
    if len(traces) < min_traces:
        raise InsufficientDataError(f"noise estimate needs at least {min_traces} traces, got {len(traces)}.")
    values = np.array([integrate_at_phase(trace, filt, filt.phi0) for trace in traces])
    sample_std = float(np.std(values, ddof=1))
    if sample_std == 0.0:
        return 0.0
    try:
        fitted = histogram_sigma(values)
    except RuntimeError as error:
        logger.warning("Histogram fit failed (%s); using the sample standard deviation.", error)
        return sample_std
    if abs(fitted - sample_std) > TRACE.histogram_tolerance * sample_std:
        logger.warning(
            "Histogram sigma %.4g differs from sample std %.4g by more than %d%%; using the sample std.",
            fitted,
            sample_std,
            int(100 * TRACE.histogram_tolerance),
        )
        return sample_std
    return fitted


def predicted_white_noise(trace: IQTrace, filt: EchoFilter, sigma_n: float) -> float:
    """Spread of I_bar expected for white noise of ``sigma_n`` volts per sample: sigma_n / sqrt(sum u^2)."""
    start, stop = filt.window
    times = trace.times
    u = filt.weights(times[(times >= start) & (times <= stop)])
    return sigma_n / math.sqrt(float(np.dot(u, u)))


def pointwise_std(traces: Sequence[IQTrace]) -> np.ndarray:
    """
    Per-sample spread sqrt(var I + var Q) across a trace population, in volts.

    Raises:
        InsufficientDataError: If fewer than two traces are given.
        GridMismatchError: If the traces do not share a time grid.
    """
    if len(traces) < 2:
        raise InsufficientDataError(f"pointwise_std needs at least 2 traces, got {len(traces)}.")
    require_common_grid(traces)
    i_stack = np.stack([trace.i_samples for trace in traces])
    q_stack = np.stack([trace.q_samples for trace in traces])
    return np.sqrt(np.var(i_stack, axis=0) + np.var(q_stack, axis=0))


def trace_difference(a: IQTrace, b: IQTrace, window: Tuple[float, float]) -> float:
    """
    Trapezoidal integral of I_b - I_a over ``window``, in V*s; ``a`` is the reference.

    Raises:
        GridMismatchError: If the traces do not share a time grid.
        WindowError: If the window is empty or not covered by the traces.
    """
    if not a.same_grid(b):
        raise GridMismatchError("trace_difference needs traces on the same time grid.")
    start, stop = float(window[0]), float(window[1])
    times = a.times
    tolerance = 1e-9 * a.dt
    if not start < stop or start < times[0] - tolerance or stop > times[-1] + tolerance:
        raise WindowError(f"window [{start:.6g}, {stop:.6g}] s is empty or outside [{times[0]:.6g}, {times[-1]:.6g}] s.")
    inside = (times >= start - tolerance) & (times <= stop + tolerance)
    if np.count_nonzero(inside) < 2:
        raise WindowError(f"window [{start:.6g}, {stop:.6g}] s holds fewer than two samples.")
    return float(trapezoid(b.i_samples[inside] - a.i_samples[inside], times[inside]))
