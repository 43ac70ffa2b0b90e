"""
Command tree of the ``tlsecho`` program.

Every numeric flag states its unit in the help text; rates quoted as X/2pi are
always suffixed ``_over_2pi``.
"""
import argparse

from tlsecho.model.config import CHAIN, DIELECTRIC, FIT, MONTE_CARLO, TRACE, TWO_PI
from tlsecho.model.echo import PRESET_NAMES, ModelVariant

FORMATS = ("json", "csv")


def seed_type(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must lie in [0, 2**64), got {value}")
    return value


def threads_type(text: str):
    """A positive worker count, or ``auto`` (None) for TLSECHO_THREADS or the CPU count."""
    if text.strip().lower() == "auto":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"threads must be a positive integer or 'auto', got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"threads must be >= 1, got {value}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("common options")
    group.add_argument("--seed", type=seed_type, default=FIT.seed, help="random seed, 64-bit unsigned (default 0)")
    group.add_argument(
        "--threads", type=threads_type, default=None, help="worker threads: a count or 'auto' (default auto)"
    )
    group.add_argument("--out", default=None, help="path of the machine-readable result file")
    group.add_argument("--format", choices=FORMATS, default="json", help="format of the --out file (default json)")
    group.add_argument("--emit-curve", default=None, metavar="PATH", help="write the (x, y) curve as CSV to PATH")
    verbosity = group.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log debug messages to standard error")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")
    return common


def _param_flags(required: bool = False) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("parameters")
    source = group.add_mutually_exclusive_group(required=required)
    source.add_argument("--params", default=None, metavar="FILE", help="parameter file (rates in Hz as X/2pi)")
    source.add_argument("--preset", choices=PRESET_NAMES, default=None, help="published device rates")
    group.add_argument(
        "--variant",
        choices=[variant.value for variant in ModelVariant],
        default=None,
        help="model variant: base (constant Gamma_2) or refined (Gamma_2 linear in T)",
    )
    return parent


def _chain_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("amplifier chain")
    group.add_argument("--cells", type=_positive_int, default=CHAIN.n_cells, help="number of cells (default 2037)")
    group.add_argument("--gain", type=float, default=CHAIN.total_gain, help="total power gain, linear (default 120.3)")
    group.add_argument(
        "--capacitance-f", type=float, default=CHAIN.capacitance, help="per-cell capacitance in F (default 39e-15)"
    )
    group.add_argument("--z0-ohm", type=float, default=CHAIN.z0, help="line impedance in Ohm (default 50)")
    group.add_argument(
        "--freq-hz", type=float, default=CHAIN.omega / TWO_PI, help="frequency in Hz (default 7e9)"
    )
    return parent


def _add_model_commands(subparsers, common, params) -> None:
    model = subparsers.add_parser("model", help="evaluate the analytic echo models")
    leaves = model.add_subparsers(dest="leaf", metavar="{hahn,stimulated,t2,t1,alpha,beta}", required=True)

    hahn = leaves.add_parser("hahn", parents=[common, params], help="two-pulse echo amplitude")
    hahn.add_argument("--temp-k", type=float, required=True, help="temperature in K")
    hahn.add_argument("--delay", type=float, nargs="+", required=True, help="delays 2 tau in s")
    hahn.add_argument("--a0", type=float, default=1.0, help="amplitude A0 in V*s (default 1)")

    stimulated = leaves.add_parser("stimulated", parents=[common, params], help="three-pulse echo amplitude")
    stimulated.add_argument("--temp-k", type=float, required=True, help="temperature in K")
    stimulated.add_argument("--tau", type=float, required=True, help="pulse separation tau in s")
    stimulated.add_argument("--tau-prime", type=float, nargs="+", required=True, help="waiting times tau' in s")
    stimulated.add_argument("--a0", type=float, default=1.0, help="amplitude A0se in V*s (default 1)")
    stimulated.add_argument("--literal-gamma-sd0", action="store_true", help="use Gamma_sd0 instead of Gamma_sd(T)")

    t2 = leaves.add_parser("t2", parents=[common, params], help="model T2 (delay 2 tau at 1/e) versus temperature")
    t2.add_argument("--temp-k", type=float, nargs="+", required=True, help="temperatures in K")

    t1 = leaves.add_parser("t1", parents=[common, params], help="model T1 (tau' at 1/e) versus temperature")
    t1.add_argument("--temp-k", type=float, nargs="+", required=True, help="temperatures in K")
    t1.add_argument("--tau", type=float, required=True, help="pulse separation tau in s")
    t1.add_argument("--literal-gamma-sd0", action="store_true", help="use Gamma_sd0 instead of Gamma_sd(T)")

    alpha = leaves.add_parser("alpha", parents=[common], help="Hahn flip-history kernel alpha in s")
    alpha.add_argument("--w", type=float, required=True, help="flip rate W in 1/s")
    alpha.add_argument("--tau", type=float, nargs="+", required=True, help="pulse separations tau in s")

    beta = leaves.add_parser("beta", parents=[common], help="stimulated flip-history kernel beta in s")
    beta.add_argument("--w", type=float, required=True, help="flip rate W in 1/s")
    beta.add_argument("--tau", type=float, required=True, help="pulse separation tau in s")
    beta.add_argument("--tau-prime", type=float, nargs="+", required=True, help="waiting times tau' in s")


def _add_simulate_commands(subparsers, common) -> None:
    simulate = subparsers.add_parser("simulate", help="Monte Carlo oracles")
    leaves = simulate.add_subparsers(dest="leaf", metavar="{telegraph,ensemble,rabi}", required=True)

    telegraph = leaves.add_parser("telegraph", parents=[common], help="flip-history average of the echo phase")
    telegraph.add_argument("--w", type=float, required=True, help="flip rate W in 1/s")
    telegraph.add_argument("--tau", type=float, required=True, help="pulse separation tau in s")
    telegraph.add_argument("--tau-prime", type=float, default=0.0, help="waiting time tau' in s (default 0: Hahn)")
    telegraph.add_argument("--histories", type=_positive_int, default=100_000, help="number of flip histories")

    ensemble = leaves.add_parser("ensemble", parents=[common], help="echo decay of a random dipolar bath")
    ensemble.add_argument("--c-b", type=float, required=True, help="bath TLS density in 1/m^3")
    ensemble.add_argument("--d-a-debye", type=float, default=3.0, help="probed dipole in debye (default 3)")
    ensemble.add_argument("--d-b-debye", type=float, default=3.0, help="bath dipole in debye (default 3)")
    ensemble.add_argument(
        "--epsilon-r", type=float, default=DIELECTRIC.epsilon_r, help="relative permittivity (default 2.5)"
    )
    ensemble.add_argument("--n-b", type=_positive_int, default=300, help="bath size (default 300)")
    ensemble.add_argument("--w", type=float, required=True, help="flip rate W in 1/s")
    ensemble.add_argument("--tau", type=float, required=True, help="pulse separation tau in s")
    ensemble.add_argument("--realizations", type=_positive_int, default=10_000, help="bath realizations")

    rabi = leaves.add_parser("rabi", parents=[common], help="two-pulse echo amplitude versus first-pulse power")
    rabi.add_argument("--gamma-r", type=float, required=True, help="mean radiative rate Gamma_R in 1/s")
    rabi.add_argument("--p1-w", type=float, nargs="+", required=True, help="first-pulse powers in W")
    rabi.add_argument("--p2-w", type=float, required=True, help="second-pulse power in W")
    rabi.add_argument("--theta", type=float, required=True, help="pulse length in s")
    rabi.add_argument("--freq-hz", type=float, required=True, help="drive frequency in Hz")
    rabi.add_argument("--spread", type=float, default=0.0, help="relative spread of Gamma_R, dimensionless")
    rabi.add_argument(
        "--samples", type=_positive_int, default=MONTE_CARLO.rabi_samples, help="rate draws (default 10000)"
    )


def _add_analyze_commands(subparsers, common) -> None:
    analyze = subparsers.add_parser("analyze", help="IQ trace processing")
    leaves = analyze.add_subparsers(dest="leaf", metavar="{trace,noise,diff}", required=True)

    trace = leaves.add_parser("trace", parents=[common], help="matched-filter integration of a trace set")
    trace.add_argument("--input", required=True, help="trace-set manifest (JSON)")
    trace.add_argument(
        "--filter-count", type=_positive_int, default=3, help="strongest echoes used for the filter (default 3)"
    )

    noise = leaves.add_parser("noise", parents=[common], help="integration noise of echo-free traces")
    noise.add_argument("--input", required=True, help="trace-set manifest (JSON)")
    noise.add_argument("--mu", type=float, required=True, help="filter centre in s")
    noise.add_argument("--sigma", type=float, required=True, help="filter width in s")
    noise.add_argument("--phi0", type=float, default=0.0, help="filter phase in rad (default 0)")
    noise.add_argument(
        "--min-traces", type=_positive_int, default=TRACE.min_noise_traces, help="minimum trace count (default 50)"
    )

    diff = leaves.add_parser("diff", parents=[common], help="integrated I difference of two traces")
    diff.add_argument("--input", required=True, help="trace-set manifest (JSON)")
    diff.add_argument("--reference", type=int, default=0, help="index of the reference trace")
    diff.add_argument("--candidate", type=int, default=1, help="index of the compared trace")
    diff.add_argument("--window", type=float, nargs=2, required=True, metavar=("START", "STOP"), help="window in s")


def _add_fit_commands(subparsers, common, params) -> None:
    fit = subparsers.add_parser("fit", help="fit decay datasets")
    leaves = fit.add_subparsers(dest="leaf", metavar="{exp,stretched,global}", required=True)

    exp = leaves.add_parser("exp", parents=[common], help="simple exponential T2 per series")
    exp.add_argument("--input", required=True, help="decay dataset (JSON)")

    stretched = leaves.add_parser("stretched", parents=[common], help="stretched exponential T1 per series")
    stretched.add_argument("--input", required=True, help="decay dataset (JSON)")

    global_fit = leaves.add_parser("global", parents=[common, params], help="multi-temperature fit of the model")
    global_fit.add_argument("--input", required=True, help="decay dataset (JSON)")
    global_fit.add_argument("--starts", type=_positive_int, default=FIT.n_starts, help="multistart count (default 8)")
    global_fit.add_argument("--bootstrap", type=int, default=0, help="bootstrap resamples (default 0: none)")
    global_fit.add_argument(
        "--subset", type=_positive_int, default=FIT.subset_size, help="series per resample (default 18)"
    )
    global_fit.add_argument("--weighted", action="store_true", help="weight residuals by 1/err_Vs")
    global_fit.add_argument("--literal-gamma-sd0", action="store_true", help="use Gamma_sd0 in the stimulated model")
    global_fit.add_argument(
        "--fixed-rates", action="store_true", help="keep the supplied rates and fit only the stimulated amplitudes"
    )
    global_fit.add_argument("--params-out", default=None, metavar="FILE", help="write the fitted parameters here")


def _add_losses_commands(subparsers, common, params, chain) -> None:
    losses = subparsers.add_parser("losses", help="loss tangent and amplifier efficiency")
    leaves = losses.add_subparsers(dest="leaf", metavar="{tandelta,efficiency,cascade}", required=True)

    tandelta = leaves.add_parser("tandelta", parents=[common, params], help="tan(delta) from Gamma_sd0 / omega_B")
    tandelta.add_argument(
        "--gamma-ratio",
        type=float,
        default=DIELECTRIC.gamma_b_over_omega_b,
        help="gamma_B / omega_B, dimensionless (default 1)",
    )

    efficiency = leaves.add_parser(
        "efficiency", parents=[common, params, chain], help="loss report with the quantum efficiency"
    )
    efficiency.add_argument(
        "--route",
        choices=("spectral-diffusion", "echo-calibration"),
        default="spectral-diffusion",
        help="how tan(delta) is obtained",
    )
    efficiency.add_argument(
        "--gamma-ratio", type=float, default=DIELECTRIC.gamma_b_over_omega_b, help="gamma_B / omega_B (default 1)"
    )
    efficiency.add_argument(
        "--epsilon-r", type=float, default=DIELECTRIC.epsilon_r, help="relative permittivity (default 2.5)"
    )
    efficiency.add_argument(
        "--band-f",
        type=float,
        nargs=2,
        default=CHAIN.capacitance_band,
        metavar=("LOW", "HIGH"),
        help="capacitance sensitivity band in F (default 20e-15 60e-15)",
    )
    efficiency.add_argument("--band-points", type=_positive_int, default=CHAIN.band_points, help="points in the band")
    efficiency.add_argument("--p-in-dbm", type=float, default=None, help="input power in dBm (echo-calibration)")
    efficiency.add_argument("--theta", type=float, default=None, help="first-pulse length in s (echo-calibration)")
    efficiency.add_argument(
        "--alpha-out", type=float, default=None, help="echo output amplitude in sqrt(photons/s) (echo-calibration)"
    )
    efficiency.add_argument(
        "--field-per-sqrt-watt", type=float, default=None, help="drive field in (V/m)/sqrt(W) (echo-calibration)"
    )
    efficiency.add_argument("--volume-m3", type=float, default=1.5e-13, help="capacitor volume in m^3")

    cascade = leaves.add_parser("cascade", parents=[common, chain], help="noise cascade through the chain")
    cascade.add_argument("--tan-delta", type=float, required=True, help="loss tangent, dimensionless")
    cascade.add_argument(
        "--n-input", type=float, default=CHAIN.quantum_noise, help="input noise in photons (default 0.5)"
    )


def _add_synth_commands(subparsers, common, params) -> None:
    synth = subparsers.add_parser("synth", help="generate synthetic data")
    leaves = synth.add_subparsers(dest="leaf", metavar="{decay,traces}", required=True)

    decay = leaves.add_parser("decay", parents=[common, params], help="decay dataset from the echo model")
    decay.add_argument("--kind", choices=("hahn", "stimulated"), default="hahn", help="echo sequence")
    decay.add_argument(
        "--temp-k-range",
        type=float,
        nargs=3,
        default=(0.01, 0.2, 24),
        metavar=("MIN", "MAX", "N"),
        help="log-spaced temperatures in K (default 0.01 0.2 24)",
    )
    decay.add_argument("--delay-max", type=float, default=4e-6, help="largest delay in s (default 4e-6)")
    decay.add_argument("--delays", type=_positive_int, default=52, help="delays per series (default 52)")
    decay.add_argument("--a0", type=float, default=1e-9, help="amplitude A0 in V*s (default 1e-9)")
    decay.add_argument("--noise", type=float, default=0.0, help="noise standard deviation in V*s (default 0)")
    decay.add_argument("--tau", type=float, default=None, help="fixed tau in s (stimulated)")
    decay.add_argument("--label", default="synthetic", help="device label")
    decay.add_argument("--literal-gamma-sd0", action="store_true", help="use Gamma_sd0 in the stimulated model")

    traces = leaves.add_parser("traces", parents=[common], help="Gaussian echoes on IQ traces")
    traces.add_argument("--dt", type=float, default=3.2e-9, help="sample period in s (default 3.2e-9)")
    traces.add_argument("--duration", type=float, required=True, help="trace length in s")
    traces.add_argument("--amplitude", type=float, required=True, help="echo amplitude in V")
    traces.add_argument("--center", type=float, required=True, help="echo centre in s")
    traces.add_argument("--width", type=float, required=True, help="echo width sigma in s")
    traces.add_argument("--phase", type=float, default=0.0, help="echo phase in rad (default 0)")
    traces.add_argument("--noise", type=float, default=0.0, help="white noise per sample in V (default 0)")
    traces.add_argument("--traces", type=_positive_int, default=1, help="number of traces (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlsecho",
        description="Spectral-diffusion analysis of two-level-system echo decays.",
    )
    subparsers = parser.add_subparsers(
        dest="group", metavar="{model,simulate,analyze,fit,losses,synth}", required=True
    )
    common = _common_flags()
    params = _param_flags()
    _add_model_commands(subparsers, common, _param_flags(required=True))
    _add_simulate_commands(subparsers, common)
    _add_analyze_commands(subparsers, common)
    _add_fit_commands(subparsers, common, params)
    _add_losses_commands(subparsers, common, params, _chain_flags())
    _add_synth_commands(subparsers, common, _param_flags(required=True))
    return parser
