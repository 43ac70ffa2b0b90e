"""Monte Carlo oracles: telegraph flip histories, a dipolar bath ensemble and a Rabi drive model."""
from .ensemble import BathEnsemble, ensemble_echo, predicted_decay_exponent
from .rabi import RabiConfig, rabi_sweep, two_pulse_rabi_amplitude
from .telegraph import TelegraphConfig, echo_phase_integrals, flip_history_average, segment_integrals

__all__ = [
    "TelegraphConfig",
    "segment_integrals",
    "echo_phase_integrals",
    "flip_history_average",
    "BathEnsemble",
    "ensemble_echo",
    "predicted_decay_exponent",
    "RabiConfig",
    "two_pulse_rabi_amplitude",
    "rabi_sweep",
]
