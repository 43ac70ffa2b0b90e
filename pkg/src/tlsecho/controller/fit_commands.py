"""`fit` commands: per-series exponentials, the global fit and its bootstrap."""
import logging

import numpy as np

from tlsecho.controller.command_result import CommandResult, load_params, quoted
from tlsecho.model.config import TWO_PI
from tlsecho.model.echo import ModelVariant, preset
from tlsecho.model.fitting import (
    bootstrap_fit,
    fit_global,
    fit_stimulated_amplitudes,
    simple_t1_table,
    simple_t2_table,
)
from tlsecho.model.persistence import read_decay_dataset, write_params

logger = logging.getLogger(__name__)

DEFAULT_INIT = {ModelVariant.BASE_INTRINSIC: "D2", ModelVariant.REFINED_TEMPERATURE_DEPENDENT: "D2-refined"}


def fit_exp(args) -> CommandResult:
    dataset = read_decay_dataset(args.input)
    rows = [tuple(row) for row in simple_t2_table(dataset)]
    temperatures = np.array([row[0] for row in rows])
    return CommandResult(
        "fit exp",
        payload={
            "input": args.input,
            "device_label": dataset.device_label,
            "series": [{"temperature_k": t, "a0_Vs": a0, "t2_s": t2} for t, a0, t2 in rows],
        },
        table=(("temperature_k", "a0_Vs", "t2_s"), rows),
        curve=(("temperature_k", "t2_s"), temperatures, np.array([row[2] for row in rows])),
    )


def fit_stretched(args) -> CommandResult:
    dataset = read_decay_dataset(args.input)
    rows = [tuple(row) for row in simple_t1_table(dataset)]
    temperatures = np.array([row[0] for row in rows])
    return CommandResult(
        "fit stretched",
        payload={
            "input": args.input,
            "device_label": dataset.device_label,
            "series": [{"temperature_k": t, "a_Vs": a, "t1_s": t1, "p": p} for t, a, t1, p in rows],
        },
        table=(("temperature_k", "a_Vs", "t1_s", "p"), rows),
        curve=(("temperature_k", "t1_s"), temperatures, np.array([row[2] for row in rows])),
    )


def _initial_params(args):
    """Start values from --params/--preset, else the D2 rates of the requested variant."""
    if args.params or args.preset:
        return load_params(args)
    variant = ModelVariant(args.variant or ModelVariant.BASE_INTRINSIC)
    return preset(DEFAULT_INIT[variant])[0], variant


def fit_global_command(args) -> CommandResult:
    dataset = read_decay_dataset(args.input)
    init, variant = _initial_params(args)
    if args.fixed_rates:
        result = fit_stimulated_amplitudes(dataset, init, variant, args.literal_gamma_sd0)
    else:
        result = fit_global(
            dataset,
            variant,
            init,
            n_starts=args.starts,
            seed=args.seed,
            weighted=args.weighted,
            literal_gamma_sd0=args.literal_gamma_sd0,
        )
    payload = {
        "input": args.input,
        "device_label": dataset.device_label,
        "kind": dataset.kind.value,
        "variant": variant.value,
        "params": quoted(result.params),
        "amplitudes": [{"temperature_k": t, "a0_Vs": a} for t, a in sorted(result.amplitudes.items())],
        "cost_Vs2": result.cost,
        "converged": result.converged,
        "n_evals": result.n_evals,
        "flags": list(result.flags),
        "message": result.message,
        "condition_number": result.condition_number,
    }
    if dataset.generator_truth is not None and dataset.truth_variant is variant:
        payload["generator_truth"] = quoted(dataset.generator_truth)
    summary = None
    if args.bootstrap > 0:
        summary = bootstrap_fit(
            dataset,
            variant,
            init,
            n_resamples=args.bootstrap,
            subset_size=args.subset,
            seed=args.seed,
            workers=args.threads,
            n_starts=args.starts,
            weighted=args.weighted,
            literal_gamma_sd0=args.literal_gamma_sd0,
        )
        payload["bootstrap"] = {
            "n_resamples": summary.n_resamples,
            "subset_size": summary.subset_size,
            "seed": summary.seed,
            "n_failed": summary.n_failed,
            "mean_over_2pi": {name: value / TWO_PI for name, value in summary.means.items()},
            "std_over_2pi": {name: value / TWO_PI for name, value in summary.stds.items()},
            "samples_over_2pi": (summary.samples / TWO_PI).tolist(),
            "statuses": list(summary.statuses),
        }
    files = []
    if args.params_out:
        files.append(write_params(args.params_out, result.params, variant, dataset.device_label))
    rows = []
    for name in variant.parameter_names:
        value = getattr(result.params, name) / TWO_PI
        if summary is None:
            rows.append((name, value))
        else:
            rows.append((name, value, summary.means[name] / TWO_PI, summary.stds[name] / TWO_PI))
    header = ("parameter", "fit_over_2pi") + (() if summary is None else ("mean_over_2pi", "std_over_2pi"))
    exit_code = 0
    if not result.converged:
        logger.warning("Global fit did not converge: %s", result.message)
        exit_code = 2
    return CommandResult("fit global", payload, table=(header, rows), files=files, exit_code=exit_code)
