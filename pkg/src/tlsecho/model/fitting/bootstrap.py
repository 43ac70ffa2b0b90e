"""
Bootstrap over whole temperature series: each resample refits a random subset of the
series, drawn without replacement.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from tlsecho.model.config import FIT
from tlsecho.model.echo.parameters import ModelVariant, SpectralDiffusionParams
from tlsecho.model.errors import DomainError, InsufficientDataError, TlsEchoError
from tlsecho.model.fitting.dataset import BootstrapSummary, DecayDataset
from tlsecho.model.fitting.global_fit import fit_global
from tlsecho.model.utils import ordered_map, substream, validate_seed

logger = logging.getLogger(__name__)


def resample_indices(n_series: int, subset_size: int, seed: int, index: int) -> np.ndarray:
    """Sorted series indices of resample ``index``; depends only on (seed, index)."""
    rng = substream(seed, index)
    return np.sort(rng.choice(n_series, size=subset_size, replace=False))


def bootstrap_fit(
    dataset: DecayDataset,
    variant: ModelVariant,
    init: SpectralDiffusionParams,
    n_resamples: int = FIT.n_resamples,
    subset_size: int = FIT.subset_size,
    seed: int = FIT.seed,
    workers: Optional[int] = None,
    **fit_kwargs,
) -> BootstrapSummary:
    """
    Refit ``n_resamples`` subsets of ``subset_size`` series and summarize each rate.

    Resamples run on a thread pool and are merged by index, so the summary does not
    depend on the worker count. A resample whose fit raises is kept as a NaN row
    with its message as status; means and stds use the successful rows only.
    ``fit_kwargs`` are passed to :func:`fit_global`.

    Raises:
        InsufficientDataError: If the dataset holds fewer than ``subset_size`` series.
    """
    variant = ModelVariant(variant)
    seed = validate_seed(seed)
    if n_resamples < 1:
        raise DomainError(f"n_resamples must be >= 1, got {n_resamples}.")
    if subset_size < 1:
        raise DomainError(f"subset_size must be >= 1, got {subset_size}.")
    n_series = len(dataset.series)
    if n_series < subset_size:
        raise InsufficientDataError(f"bootstrap needs at least {subset_size} series, the dataset has {n_series}.")
    names = variant.parameter_names

    def run(index: int) -> Tuple[np.ndarray, str]:
        subset = dataset.subset(resample_indices(n_series, subset_size, seed, index))
        try:
            result = fit_global(subset, variant, init, **fit_kwargs)
        except TlsEchoError as error:
            logger.warning("Bootstrap resample %d failed: %s", index, error)
            return np.full(len(names), np.nan), str(error)
        if not result.converged:
            logger.warning("Bootstrap resample %d did not converge: %s", index, result.message)
            return np.full(len(names), np.nan), f"not converged: {result.message}"
        return np.asarray(result.params.values(variant), dtype=float), "ok"

    rows = ordered_map(run, list(range(n_resamples)), workers)
    samples = np.vstack([row for row, _ in rows])
    statuses = tuple(status for _, status in rows)
    good = samples[[status == "ok" for status in statuses]]
    means = {name: float("nan") for name in names}
    stds = dict(means)
    if len(good):
        for column, name in enumerate(names):
            means[name] = float(np.mean(good[:, column]))
            stds[name] = float(np.std(good[:, column], ddof=1)) if len(good) >= 2 else 0.0
    summary = BootstrapSummary(
        variant=variant,
        parameter_names=names,
        means=means,
        stds=stds,
        samples=samples,
        statuses=statuses,
        n_resamples=n_resamples,
        subset_size=subset_size,
        seed=seed,
    )
    logger.info(
        "Bootstrap finished: %d resamples of %d series, %d failed",
        n_resamples,
        subset_size,
        summary.n_failed,
    )
    return summary
