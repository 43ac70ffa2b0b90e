"""`simulate` commands: Monte Carlo oracles and the two-pulse Rabi model."""
import logging
import math

import numpy as np

from tlsecho.controller.command_result import CommandResult
from tlsecho.model.bath import (
    BathEnsemble,
    RabiConfig,
    TelegraphConfig,
    ensemble_echo,
    flip_history_average,
    predicted_decay_exponent,
    rabi_sweep,
)
from tlsecho.model.echo import CONSTANTS, alpha_kernel, beta_kernel
from tlsecho.model.losses import debye_to_si

logger = logging.getLogger(__name__)


def simulate_telegraph(args) -> CommandResult:
    cfg = TelegraphConfig(w=args.w, tau=args.tau, tau_prime=args.tau_prime, n_histories=args.histories, seed=args.seed)
    mean, std_error = flip_history_average(cfg, workers=args.threads)
    if cfg.tau_prime == 0.0:
        closed_form = float(alpha_kernel(cfg.tau, cfg.w))
    else:
        closed_form = float(beta_kernel(cfg.tau, cfg.tau_prime, cfg.w))
    deviation = (mean - closed_form) / std_error if std_error else 0.0
    logger.info("Telegraph average %.6g s vs closed form %.6g s (%.2f standard errors)", mean, closed_form, deviation)
    payload = {
        "w_per_s": cfg.w,
        "tau_s": cfg.tau,
        "tau_prime_s": cfg.tau_prime,
        "n_histories": cfg.n_histories,
        "seed": cfg.seed,
        "mean_s": mean,
        "std_error_s": std_error,
        "closed_form_s": closed_form,
        "deviation_std_errors": deviation,
    }
    return CommandResult("simulate telegraph", payload, table=(tuple(payload), [tuple(payload.values())]))


def simulate_ensemble(args) -> CommandResult:
    bath = BathEnsemble(
        c_b=args.c_b,
        d_a=debye_to_si(args.d_a_debye),
        d_b=debye_to_si(args.d_b_debye),
        epsilon=args.epsilon_r * CONSTANTS.epsilon0,
        n_b=args.n_b,
        seed=args.seed,
    )
    amplitude, std_error = ensemble_echo(bath, args.w, args.tau, args.realizations, workers=args.threads)
    predicted = predicted_decay_exponent(bath, args.w, args.tau)
    measured = -math.log(amplitude) if amplitude > 0.0 else math.inf
    payload = {
        "c_b_per_m3": bath.c_b,
        "n_b": bath.n_b,
        "r_max_m": bath.r_max,
        "w_per_s": args.w,
        "tau_s": args.tau,
        "n_realizations": args.realizations,
        "seed": bath.seed,
        "amplitude": amplitude,
        "std_error": std_error,
        "decay_exponent": measured,
        "predicted_decay_exponent": predicted,
        "gamma_sd_rad_per_s": bath.gamma_sd,
    }
    return CommandResult("simulate ensemble", payload, table=(tuple(payload), [tuple(payload.values())]))


def simulate_rabi(args) -> CommandResult:
    cfg = RabiConfig(
        gamma_r=args.gamma_r,
        pulse1_power=0.0,
        pulse2_power=args.p2_w,
        theta=args.theta,
        omega_d=2.0 * math.pi * args.freq_hz,
        coupling_spread=args.spread,
        n_samples=args.samples,
        seed=args.seed,
    )
    powers = np.asarray(args.p1_w, dtype=float)
    amplitudes = np.atleast_1d(rabi_sweep(cfg, powers))
    rows = list(zip(powers.tolist(), amplitudes.tolist()))
    return CommandResult(
        "simulate rabi",
        payload={
            "gamma_r_per_s": cfg.gamma_r,
            "pulse2_power_w": cfg.pulse2_power,
            "theta_s": cfg.theta,
            "coupling_spread": cfg.coupling_spread,
            "seed": cfg.seed,
            "points": [{"pulse1_power_w": p, "amplitude": a} for p, a in rows],
        },
        table=(("pulse1_power_w", "amplitude"), rows),
        curve=(("pulse1_power_w", "amplitude"), powers, amplitudes),
    )
