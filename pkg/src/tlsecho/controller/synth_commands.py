"""`synth` commands: write synthetic decay datasets and IQ trace sets."""
import math

from tlsecho.controller.command_result import CommandResult, load_params, quoted
from tlsecho.model.errors import DomainError
from tlsecho.model.fitting import DecayKind
from tlsecho.model.persistence import write_decay_dataset, write_trace_set
from tlsecho.model.synth import SynthDecaySpec, SynthTraceSpec, generate_decay_dataset, generate_trace_set, table_grid


def _require_out(args, what: str) -> str:
    if not args.out:
        raise DomainError(f"--out is required: it names the {what} to write.")
    return args.out


def synth_decay(args) -> CommandResult:
    out = _require_out(args, "dataset file")
    params, variant = load_params(args)
    t_min, t_max, n_temperatures = args.temp_k_range
    temperatures, delays = table_grid(t_min, t_max, int(n_temperatures), args.delay_max, args.delays)
    spec = SynthDecaySpec(
        params=params,
        variant=variant,
        temperatures=temperatures,
        delays=delays,
        amplitudes=args.a0,
        noise_std=args.noise,
        seed=args.seed,
        kind=DecayKind(args.kind),
        tau=args.tau,
        device_label=args.label,
        literal_gamma_sd0=args.literal_gamma_sd0,
    )
    dataset = generate_decay_dataset(spec)
    write_decay_dataset(out, dataset)
    payload = {
        "output": out,
        "kind": spec.kind.value,
        "variant": variant.value,
        "params": quoted(params),
        "n_temperatures": len(temperatures),
        "n_delays": len(delays),
        "noise_std_Vs": spec.noise_std,
        "seed": spec.seed,
    }
    return CommandResult(
        "synth decay",
        payload,
        table=(("n_temperatures", "n_delays", "noise_std_Vs"), [(len(temperatures), len(delays), spec.noise_std)]),
        files=[out],
        out_written=True,
    )


def synth_traces(args) -> CommandResult:
    out = _require_out(args, "trace manifest")
    spec = SynthTraceSpec(
        dt=args.dt,
        duration=args.duration,
        amplitude=args.amplitude,
        center=args.center,
        width=args.width,
        phase=args.phase,
        noise_std_per_sample=args.noise,
        n_traces=args.traces,
        seed=args.seed,
    )
    write_trace_set(out, generate_trace_set(spec))
    payload = {
        "output": out,
        "n_traces": spec.n_traces,
        "n_samples": spec.n_samples,
        "expected_i_bar_Vs": spec.amplitude * spec.width * math.sqrt(2.0 * math.pi),
        "seed": spec.seed,
    }
    return CommandResult(
        "synth traces",
        payload,
        table=(("n_traces", "n_samples"), [(spec.n_traces, spec.n_samples)]),
        files=[out],
        out_written=True,
    )
