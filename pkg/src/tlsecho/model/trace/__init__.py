"""Echo trace processing: pulse fits, matched filter, weighted integration and noise estimates."""
from .echo_filter import (
    EchoFilter,
    EchoIntegral,
    build_filter,
    integrate_at_phase,
    integrate_echo,
    quadrature_residual,
    strongest_traces,
)
from .iq_trace import IQTrace, Quadrature, require_common_grid
from .noise import estimate_integration_noise, histogram_sigma, pointwise_std, predicted_white_noise, trace_difference
from .pulse_fit import GaussianPulseFit, fit_gaussian_pulse

__all__ = [
    "IQTrace",
    "Quadrature",
    "require_common_grid",
    "GaussianPulseFit",
    "fit_gaussian_pulse",
    "EchoFilter",
    "EchoIntegral",
    "build_filter",
    "integrate_echo",
    "integrate_at_phase",
    "quadrature_residual",
    "strongest_traces",
    "estimate_integration_noise",
    "histogram_sigma",
    "predicted_white_noise",
    "pointwise_std",
    "trace_difference",
]
