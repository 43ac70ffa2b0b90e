"""`model` commands: evaluate the analytic echo models and kernels."""
import numpy as np

from tlsecho.controller.command_result import CommandResult, load_params, quoted
from tlsecho.model.echo import (
    alpha_kernel,
    beta_kernel,
    hahn_curve,
    stimulated_curve,
    t1_curve,
    t2_curve,
)


def model_hahn(args) -> CommandResult:
    params, variant = load_params(args)
    delays = np.asarray(args.delay, dtype=float)
    amplitudes = hahn_curve(params, variant, args.a0, delays, args.temp_k)
    rows = [(d, a) for d, a in zip(delays.tolist(), amplitudes.tolist())]
    return CommandResult(
        command="model hahn",
        payload={
            "variant": variant.value,
            "params": quoted(params),
            "temperature_k": args.temp_k,
            "a0_Vs": args.a0,
            "points": [{"delay_s": d, "amplitude_Vs": a} for d, a in rows],
        },
        table=(("delay_s", "amplitude_Vs"), rows),
        curve=(("delay_s", "amplitude_Vs"), delays, amplitudes),
    )


def model_stimulated(args) -> CommandResult:
    params, variant = load_params(args)
    tau_primes = np.asarray(args.tau_prime, dtype=float)
    amplitudes = stimulated_curve(params, variant, args.a0, args.tau, tau_primes, args.temp_k, args.literal_gamma_sd0)
    rows = [(t, a) for t, a in zip(tau_primes.tolist(), amplitudes.tolist())]
    return CommandResult(
        command="model stimulated",
        payload={
            "variant": variant.value,
            "params": quoted(params),
            "temperature_k": args.temp_k,
            "tau_s": args.tau,
            "a0_Vs": args.a0,
            "literal_gamma_sd0": args.literal_gamma_sd0,
            "points": [{"tau_prime_s": t, "amplitude_Vs": a} for t, a in rows],
        },
        table=(("tau_prime_s", "amplitude_Vs"), rows),
        curve=(("tau_prime_s", "amplitude_Vs"), tau_primes, amplitudes),
    )


def model_t2(args) -> CommandResult:
    """T2 as the delay 2 tau at which the Hahn amplitude falls to 1/e."""
    params, variant = load_params(args)
    temperatures = np.asarray(args.temp_k, dtype=float)
    values = t2_curve(params, variant, temperatures)
    rows = list(zip(temperatures.tolist(), values))
    return CommandResult(
        command="model t2",
        payload={
            "variant": variant.value,
            "params": quoted(params),
            "points": [{"temperature_k": t, "t2_s": v} for t, v in rows],
        },
        table=(("temperature_k", "t2_s"), rows),
        curve=(("temperature_k", "t2_s"), temperatures, np.asarray(values)),
    )


def model_t1(args) -> CommandResult:
    params, variant = load_params(args)
    temperatures = np.asarray(args.temp_k, dtype=float)
    values = t1_curve(params, variant, args.tau, temperatures, args.literal_gamma_sd0)
    rows = list(zip(temperatures.tolist(), values))
    return CommandResult(
        command="model t1",
        payload={
            "variant": variant.value,
            "params": quoted(params),
            "tau_s": args.tau,
            "literal_gamma_sd0": args.literal_gamma_sd0,
            "points": [{"temperature_k": t, "t1_s": v} for t, v in rows],
        },
        table=(("temperature_k", "t1_s"), rows),
        curve=(("temperature_k", "t1_s"), temperatures, np.asarray(values)),
    )


def model_alpha(args) -> CommandResult:
    taus = np.asarray(args.tau, dtype=float)
    values = np.atleast_1d(alpha_kernel(taus, args.w))
    rows = list(zip(taus.tolist(), values.tolist()))
    return CommandResult(
        command="model alpha",
        payload={"w_per_s": args.w, "points": [{"tau_s": t, "alpha_s": v} for t, v in rows]},
        table=(("tau_s", "alpha_s"), rows),
        curve=(("tau_s", "alpha_s"), taus, values),
    )


def model_beta(args) -> CommandResult:
    tau_primes = np.asarray(args.tau_prime, dtype=float)
    values = np.atleast_1d(beta_kernel(args.tau, tau_primes, args.w))
    rows = list(zip(tau_primes.tolist(), values.tolist()))
    return CommandResult(
        command="model beta",
        payload={
            "w_per_s": args.w,
            "tau_s": args.tau,
            "points": [{"tau_prime_s": t, "beta_s": v} for t, v in rows],
        },
        table=(("tau_prime_s", "beta_s"), rows),
        curve=(("tau_prime_s", "beta_s"), tau_primes, values),
    )
