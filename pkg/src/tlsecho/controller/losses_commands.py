"""`losses` commands: loss tangent, amplifier efficiency and the noise cascade."""
import math

from tlsecho.controller.command_result import CommandResult, load_params
from tlsecho.model.errors import DomainError
from tlsecho.model.losses import (
    AmplifierChainSpec,
    DielectricSpec,
    EchoCalibration,
    cascade_efficiency,
    cell_attenuation,
    dbm_to_watt,
    echo_calibration_loss_report,
    noise_cascade,
    per_cell_gain,
    quantum_efficiency,
    spectral_diffusion_loss_report,
    tan_delta_from_spectral_diffusion,
)


def chain_from_args(args) -> AmplifierChainSpec:
    return AmplifierChainSpec(
        n_cells=args.cells,
        total_gain=args.gain,
        capacitance=args.capacitance_f,
        z0=args.z0_ohm,
        omega=2.0 * math.pi * args.freq_hz,
    )


def losses_tandelta(args) -> CommandResult:
    params, _ = load_params(args)
    tan_delta = tan_delta_from_spectral_diffusion(params.gamma_sd0, params.omega_b, args.gamma_ratio)
    payload = {
        "gamma_sd0_over_2pi_hz": params.gamma_sd0 / (2.0 * math.pi),
        "omega_b_over_2pi_hz": params.omega_b / (2.0 * math.pi),
        "gamma_b_over_omega_b": args.gamma_ratio,
        "tan_delta": tan_delta,
    }
    return CommandResult("losses tandelta", payload, table=(tuple(payload), [tuple(payload.values())]))


def losses_efficiency(args) -> CommandResult:
    """Full loss report along either route; every assumed constant is listed in it."""
    chain = chain_from_args(args)
    dielectric = DielectricSpec(epsilon_r=args.epsilon_r, gamma_b_over_omega_b=args.gamma_ratio)
    band = (args.band_f[0], args.band_f[1])
    if args.route == "echo-calibration":
        for flag in ("p_in_dbm", "theta", "alpha_out", "field_per_sqrt_watt"):
            if getattr(args, flag) is None:
                raise DomainError(f"--{flag.replace('_', '-')} is required for the echo-calibration route.")
        calibration = EchoCalibration(
            p_in=dbm_to_watt(args.p_in_dbm),
            omega_d=2.0 * math.pi * args.freq_hz,
            theta=args.theta,
            alpha_out=args.alpha_out,
            field_per_sqrt_watt=args.field_per_sqrt_watt,
            volume=args.volume_m3,
        )
        report = echo_calibration_loss_report(calibration, chain, dielectric, band, args.band_points)
    else:
        params, _ = load_params(args)
        label = args.params or args.preset
        report = spectral_diffusion_loss_report(params, chain, dielectric, band, args.band_points, label)
    rows = [(entry["capacitance_f"], entry["quantum_efficiency"]) for entry in report["efficiency_band"]]
    return CommandResult("losses efficiency", report, table=(("capacitance_f", "quantum_efficiency"), rows))


def losses_cascade(args) -> CommandResult:
    chain = chain_from_args(args)
    a = cell_attenuation(chain, args.tan_delta)
    g = per_cell_gain(chain)
    cascade = noise_cascade(chain, a, g, args.n_input)
    payload = {
        "tan_delta": args.tan_delta,
        "n_cells": chain.n_cells,
        "attenuation": a,
        "per_cell_gain": g,
        "n_input": args.n_input,
        "output_noise_closed_form": cascade.closed_form,
        "output_noise_iterated": cascade.iterated,
        "relative_difference": abs(cascade.closed_form - cascade.iterated) / abs(cascade.closed_form),
        "transmission_over_noise": cascade_efficiency(chain, a, g),
        "quantum_efficiency": quantum_efficiency(a, g),
    }
    return CommandResult("losses cascade", payload, table=(tuple(payload), [tuple(payload.values())]))
