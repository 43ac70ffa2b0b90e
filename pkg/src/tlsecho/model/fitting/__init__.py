"""Decay datasets and fits: single-series exponentials, the global fit and its bootstrap."""
from .bootstrap import bootstrap_fit, resample_indices
from .dataset import BootstrapSummary, DecayDataset, DecayKind, FitResult, TemperatureSeries
from .exponential import (
    SimpleExponentialFit,
    SimpleT1Row,
    SimpleT2Row,
    StretchedExponentialFit,
    fit_simple_exponential,
    fit_stretched_exponential,
    simple_t1_table,
    simple_t2_table,
)
from .global_fit import GlobalFitProblem, fit_global, fit_stimulated_amplitudes, parameter_bounds

__all__ = [
    "DecayKind",
    "TemperatureSeries",
    "DecayDataset",
    "FitResult",
    "BootstrapSummary",
    "SimpleExponentialFit",
    "StretchedExponentialFit",
    "SimpleT2Row",
    "SimpleT1Row",
    "fit_simple_exponential",
    "fit_stretched_exponential",
    "simple_t2_table",
    "simple_t1_table",
    "GlobalFitProblem",
    "parameter_bounds",
    "fit_global",
    "fit_stimulated_amplitudes",
    "bootstrap_fit",
    "resample_indices",
]
