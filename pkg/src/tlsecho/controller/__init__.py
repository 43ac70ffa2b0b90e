# One handler per leaf command; each takes the parsed arguments and returns a CommandResult
from .analyze_commands import analyze_diff, analyze_noise, analyze_trace
from .command_result import CommandResult, load_params
from .fit_commands import fit_exp, fit_global_command, fit_stretched
from .losses_commands import losses_cascade, losses_efficiency, losses_tandelta
from .model_commands import model_alpha, model_beta, model_hahn, model_stimulated, model_t1, model_t2
from .simulate_commands import simulate_ensemble, simulate_rabi, simulate_telegraph
from .synth_commands import synth_decay, synth_traces

COMMANDS = {
    ("model", "hahn"): model_hahn,
    ("model", "stimulated"): model_stimulated,
    ("model", "t2"): model_t2,
    ("model", "t1"): model_t1,
    ("model", "alpha"): model_alpha,
    ("model", "beta"): model_beta,
    ("simulate", "telegraph"): simulate_telegraph,
    ("simulate", "ensemble"): simulate_ensemble,
    ("simulate", "rabi"): simulate_rabi,
    ("analyze", "trace"): analyze_trace,
    ("analyze", "noise"): analyze_noise,
    ("analyze", "diff"): analyze_diff,
    ("fit", "exp"): fit_exp,
    ("fit", "stretched"): fit_stretched,
    ("fit", "global"): fit_global_command,
    ("losses", "tandelta"): losses_tandelta,
    ("losses", "efficiency"): losses_efficiency,
    ("losses", "cascade"): losses_cascade,
    ("synth", "decay"): synth_decay,
    ("synth", "traces"): synth_traces,
}

__all__ = ["COMMANDS", "CommandResult", "load_params"]
