"""`analyze` commands: matched-filter integration, noise estimates and trace differences."""
import math

import numpy as np

from tlsecho.controller.command_result import CommandResult
from tlsecho.model.errors import DomainError
from tlsecho.model.persistence import read_trace_set
from tlsecho.model.trace import (
    EchoFilter,
    build_filter,
    estimate_integration_noise,
    integrate_echo,
    pointwise_std,
    predicted_white_noise,
    quadrature_residual,
    strongest_traces,
    trace_difference,
)


def _filter_payload(filt: EchoFilter) -> dict:
    return {"mu_bar_s": filt.mu_bar, "sigma_bar_s": filt.sigma_bar, "phi0_rad": filt.phi0}


def analyze_trace(args) -> CommandResult:
    """Build the filter from the strongest echoes, then integrate every trace of the set."""
    traces = read_trace_set(args.input)
    filt = build_filter(strongest_traces(traces, args.filter_count))
    rows = []
    for index, trace in enumerate(traces):
        integral = integrate_echo(trace, filt)
        residual = quadrature_residual(trace, filt, integral.phi)
        rows.append((index, integral.i_bar, integral.phi, residual))
    return CommandResult(
        "analyze trace",
        payload={
            "input": args.input,
            "filter": _filter_payload(filt),
            "echoes": [
                {"index": k, "i_bar_Vs": i_bar, "phi_rad": phi, "q_bar_Vs": q_bar} for k, i_bar, phi, q_bar in rows
            ],
        },
        table=(("index", "i_bar_Vs", "phi_rad", "q_bar_Vs"), rows),
    )


def analyze_noise(args) -> CommandResult:
    """
    Integration noise of echo-free traces next to the white-noise prediction from the
    per-sample spread.
    """
    traces = read_trace_set(args.input)
    filt = EchoFilter(mu_bar=args.mu, sigma_bar=args.sigma, phi0=args.phi0)
    noise = estimate_integration_noise(traces, filt, args.min_traces)
    sigma_n = float(np.mean(pointwise_std(traces))) / math.sqrt(2.0)
    predicted = predicted_white_noise(traces[0], filt, sigma_n)
    payload = {
        "input": args.input,
        "n_traces": len(traces),
        "filter": _filter_payload(filt),
        "integration_noise_Vs": noise,
        "per_sample_noise_v": sigma_n,
        "predicted_white_noise_Vs": predicted,
    }
    rows = [(len(traces), noise, sigma_n, predicted)]
    header = ("n_traces", "integration_noise_Vs", "per_sample_noise_v", "predicted_white_noise_Vs")
    return CommandResult("analyze noise", payload, table=(header, rows))


def analyze_diff(args) -> CommandResult:
    traces = read_trace_set(args.input)
    for flag, index in (("--reference", args.reference), ("--candidate", args.candidate)):
        if not 0 <= index < len(traces):
            raise DomainError(f"{flag} must index one of the {len(traces)} traces, got {index}.")
    window = (args.window[0], args.window[1])
    difference = trace_difference(traces[args.reference], traces[args.candidate], window)
    payload = {
        "input": args.input,
        "reference": args.reference,
        "candidate": args.candidate,
        "window_s": list(window),
        "difference_Vs": difference,
    }
    return CommandResult(
        "analyze diff",
        payload,
        table=(("reference", "candidate", "difference_Vs"), [(args.reference, args.candidate, difference)]),
    )
