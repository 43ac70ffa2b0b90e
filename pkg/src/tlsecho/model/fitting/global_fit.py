"""
Global multi-temperature fit of the spectral-diffusion model.

The shared rates are optimized in log space with a trust-region least-squares solver.
The per-series amplitudes enter linearly and are profiled out at every evaluation:
A0(T) = sum(y m) / sum(m^2), with m the unit-amplitude model of that series.
"""
import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import OptimizeResult, least_squares, minimize

from tlsecho.model.config import FIT
from tlsecho.model.echo.amplitudes import hahn_amplitude, stimulated_amplitude
from tlsecho.model.echo.parameters import ModelVariant, SpectralDiffusionParams
from tlsecho.model.errors import ConvergenceError, DomainError, SingularProfileError
from tlsecho.model.fitting.dataset import DecayDataset, DecayKind, FitResult

logger = logging.getLogger(__name__)

# profiles with sum(m^2) below this are treated as a vanished model
_SINGULAR_NORM = 1e-300


def parameter_bounds(variant: ModelVariant) -> Tuple[np.ndarray, np.ndarray]:
    """Lower and upper bounds of the log-rates, in the order of ``variant.parameter_names``."""
    limits = {"omega_b": FIT.omega_b_bounds, "w_ex": FIT.w_ex_bounds}
    pairs = [limits.get(name, FIT.rate_bounds) for name in ModelVariant(variant).parameter_names]
    return np.log([low for low, _ in pairs]), np.log([high for _, high in pairs])


class GlobalFitProblem:
    """
    Flattened residual problem for one dataset and one model variant; the free
    parameters are the log-rates in the order of ``variant.parameter_names``.
    """

    def __init__(
        self,
        dataset: DecayDataset,
        variant: ModelVariant,
        weighted: bool = False,
        literal_gamma_sd0: bool = False,
    ):
        self.dataset = dataset
        self.variant = ModelVariant(variant)
        self.literal_gamma_sd0 = literal_gamma_sd0
        counts = [series.n_points for series in dataset.series]
        self.series_index = np.repeat(np.arange(len(counts)), counts)
        self.delays = np.concatenate([series.delay_array for series in dataset.series])
        self.y = np.concatenate([series.amplitude_array for series in dataset.series])
        self.temperatures = np.repeat([series.temperature for series in dataset.series], counts)
        if dataset.kind is DecayKind.STIMULATED:
            self.taus = np.repeat([series.tau for series in dataset.series], counts)
        self.weights = np.ones_like(self.y)
        if weighted:
            for position, series in enumerate(dataset.series):
                if series.errors is None or min(series.errors) <= 0.0:
                    raise DomainError(f"weighted fit needs positive errors on every point (series {position}).")
            self.weights = 1.0 / np.concatenate([series.error_array for series in dataset.series])
        # residuals are divided by this so the optimizer tolerances see order-one values
        self.scale = float(np.max(np.abs(self.weights * self.y))) or 1.0
        self.n_series = len(counts)
        self.n_evals = 0

    def unit_model(self, params: SpectralDiffusionParams) -> np.ndarray:
        if self.dataset.kind is DecayKind.HAHN:
            values = hahn_amplitude(params, self.variant, 1.0, 0.5 * self.delays, self.temperatures)
        else:
            values = stimulated_amplitude(
                params, self.variant, 1.0, self.taus, self.delays, self.temperatures, self.literal_gamma_sd0
            )
        return np.asarray(values, dtype=float)

    def profile(self, model: np.ndarray, strict: bool = False) -> np.ndarray:
        """
        Weighted least-squares amplitude of every series.

        Raises:
            SingularProfileError: With ``strict``, if the model of a series vanishes.
        """
        w2 = self.weights ** 2
        numerator = np.bincount(self.series_index, weights=w2 * self.y * model, minlength=self.n_series)
        denominator = np.bincount(self.series_index, weights=w2 * model * model, minlength=self.n_series)
        singular = denominator <= _SINGULAR_NORM
        if strict and np.any(singular):
            index = int(np.argmax(singular))
            raise SingularProfileError(
                f"model vanishes for the series at T = {self.dataset.series[index].temperature} K; "
                "its amplitude is undefined."
            )
        return np.where(singular, 0.0, numerator / np.where(singular, 1.0, denominator))

    def params_from_log(self, log_values: np.ndarray) -> SpectralDiffusionParams:
        return SpectralDiffusionParams.from_values(self.variant, np.exp(log_values))

    def residuals(self, log_values: np.ndarray) -> np.ndarray:
        self.n_evals += 1
        model = self.unit_model(self.params_from_log(log_values))
        amplitudes = self.profile(model)
        return self.weights * (self.y - amplitudes[self.series_index] * model) / self.scale

    def cost(self, log_values: np.ndarray) -> float:
        """Sum of squared scaled residuals."""
        residual = self.residuals(log_values)
        return float(np.dot(residual, residual))


def _starts(init: np.ndarray, lower: np.ndarray, upper: np.ndarray, n_starts: int, jitter: float, seed: int):
    margin = 1e-9 * (upper - lower)
    clip_low, clip_high = lower + margin, upper - margin
    rng = np.random.default_rng(seed)
    starts = [np.clip(init, clip_low, clip_high)]
    for _ in range(n_starts - 1):
        offset = math.log(10.0) * rng.uniform(-jitter, jitter, size=init.size)
        starts.append(np.clip(init + offset, clip_low, clip_high))
    return starts


def _refine(problem: GlobalFitProblem, start: np.ndarray, lower, upper) -> OptimizeResult:
    result = least_squares(
        problem.residuals,
        start,
        bounds=(lower, upper),
        method="trf",
        jac="2-point",
        ftol=FIT.tolerance,
        xtol=FIT.tolerance,
        gtol=FIT.tolerance,
        max_nfev=FIT.max_nfev,
    )
    result.cost_value = float(np.dot(result.fun, result.fun))
    if result.success:
        return result
    logger.debug("least squares stopped (%s); restarting with Nelder-Mead", result.message)
    simplex = minimize(
        problem.cost,
        result.x,
        method="Nelder-Mead",
        bounds=list(zip(lower, upper)),
        options={"xatol": 1e-10, "fatol": 1e-30, "maxfev": FIT.max_nfev * 2},
    )
    if simplex.fun < result.cost_value:
        result.x = simplex.x
        result.fun = problem.residuals(simplex.x)
        result.cost_value = float(simplex.fun)
        result.success = bool(simplex.success)
        result.message = f"Nelder-Mead: {simplex.message}"
    return result


def _condition_number(jacobian: np.ndarray) -> float:
    singular_values = np.linalg.svd(jacobian, compute_uv=False)
    if singular_values[-1] == 0.0:
        return math.inf
    return float(singular_values[0] / singular_values[-1])


def fit_global(
    dataset: DecayDataset,
    variant: ModelVariant,
    init: SpectralDiffusionParams,
    n_starts: int = FIT.n_starts,
    jitter_decades: float = FIT.jitter_decades,
    seed: int = FIT.seed,
    weighted: bool = False,
    literal_gamma_sd0: bool = False,
) -> FitResult:
    """
    Minimize the summed squared residuals over the shared rates, with A0(T) profiled.

    The first start is ``init`` itself; the others are jittered by up to
    ``jitter_decades`` per rate. A dataset with a single temperature cannot identify
    the bath parameters and is reported with ``converged=False``.

    Raises:
        DomainError: If ``init`` lacks a field of ``variant`` or temperatures repeat.
        SingularProfileError: If the best fit leaves a series with a vanishing model.
        ConvergenceError: If no start produces a finite cost.
    """
    variant = ModelVariant(variant)
    temperatures = dataset.temperatures
    if len(set(temperatures)) != len(temperatures):
        raise DomainError("temperatures must be distinct within a dataset to key the amplitudes.")
    if n_starts < 1:
        raise DomainError(f"n_starts must be >= 1, got {n_starts}.")
    problem = GlobalFitProblem(dataset, variant, weighted=weighted, literal_gamma_sd0=literal_gamma_sd0)
    lower, upper = parameter_bounds(variant)
    init_log = np.log(np.maximum(np.asarray(init.values(variant), dtype=float), np.exp(lower)))

    best: Optional[OptimizeResult] = None
    for start in _starts(init_log, lower, upper, n_starts, jitter_decades, seed):
        result = _refine(problem, start, lower, upper)
        if not math.isfinite(result.cost_value):
            continue
        if best is None or result.cost_value < best.cost_value:
            best = result
    if best is None:
        raise ConvergenceError("no start of the global fit produced a finite cost.")

    params = problem.params_from_log(best.x)
    model = problem.unit_model(params)
    amplitudes = problem.profile(model, strict=True)
    flags: List[str] = []
    converged = bool(best.success)
    message = str(best.message)
    if len(set(temperatures)) < 2:
        flags.append("single-temperature")
        converged = False
        message = "a single temperature cannot identify omega_B and Gamma_1^B."
    condition = _condition_number(problem_jacobian(problem, best))
    if condition > FIT.condition_limit:
        flags.append("ill-conditioned")
        logger.warning("Global fit is ill-conditioned (condition number %.3g); the cost surface is flat.", condition)
    if any(np.isclose(best.x, lower, rtol=0, atol=1e-6)) or any(np.isclose(best.x, upper, rtol=0, atol=1e-6)):
        flags.append("at-bound")
    result = FitResult(
        params=params,
        variant=variant,
        amplitudes=_amplitude_map(temperatures, amplitudes),
        cost=float(np.sum((problem.y - amplitudes[problem.series_index] * model) ** 2 * problem.weights ** 2)),
        converged=converged,
        n_evals=problem.n_evals,
        flags=tuple(flags),
        message=message,
        condition_number=condition,
    )
    logger.info(
        "Global %s fit on %d series: cost %.6g, converged %s, %d evaluations",
        variant.value,
        problem.n_series,
        result.cost,
        result.converged,
        result.n_evals,
    )
    return result


def problem_jacobian(problem: GlobalFitProblem, result: OptimizeResult) -> np.ndarray:
    jacobian = getattr(result, "jac", None)
    if jacobian is None or np.shape(jacobian)[1] != np.size(result.x):
        step = 1e-7
        base = problem.residuals(result.x)
        columns = []
        for index in range(result.x.size):
            shifted = result.x.copy()
            shifted[index] += step
            columns.append((problem.residuals(shifted) - base) / step)
        jacobian = np.column_stack(columns)
    return np.asarray(jacobian, dtype=float)


def _amplitude_map(temperatures, amplitudes: np.ndarray) -> Dict[float, float]:
    return {float(t): float(a) for t, a in zip(temperatures, amplitudes)}


def fit_stimulated_amplitudes(
    dataset: DecayDataset,
    params: SpectralDiffusionParams,
    variant: ModelVariant,
    literal_gamma_sd0: bool = False,
) -> FitResult:
    """
    Profile only A0se(T) of a stimulated dataset, keeping the rates fixed (typically
    those of the Hahn fit).
    """
    if dataset.kind is not DecayKind.STIMULATED:
        raise DomainError("fit_stimulated_amplitudes needs a stimulated dataset.")
    problem = GlobalFitProblem(dataset, variant, literal_gamma_sd0=literal_gamma_sd0)
    params.check_variant(variant)
    model = problem.unit_model(params)
    amplitudes = problem.profile(model, strict=True)
    residual = problem.y - amplitudes[problem.series_index] * model
    return FitResult(
        params=params,
        variant=ModelVariant(variant),
        amplitudes=_amplitude_map(dataset.temperatures, amplitudes),
        cost=float(np.dot(residual, residual)),
        converged=True,
        n_evals=1,
        message="amplitudes profiled at fixed rates",
    )
