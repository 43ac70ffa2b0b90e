"""Loss tangent, dipole and density estimates, and amplifier efficiency from echo parameters."""
from .amplifier import (
    AmplifierChainSpec,
    CascadeResult,
    cascade_efficiency,
    cell_attenuation,
    efficiency_band,
    noise_cascade,
    per_cell_gain,
    quantum_efficiency,
)
from .dielectric import (
    DielectricSpec,
    density_from_concentration,
    tan_delta_from_density,
    tan_delta_from_spectral_diffusion,
)
from .rabi_calibration import (
    DipoleEstimate,
    EchoCalibration,
    density_from_echo,
    dipole_from_rabi,
    rabi_rate,
    radiative_rate_from_pi_pulse,
)
from .reports import echo_calibration_loss_report, spectral_diffusion_loss_report
from .units import db_to_ratio, dbm_to_watt, debye_to_si, ratio_to_db, si_to_debye, watt_to_dbm

__all__ = [
    "AmplifierChainSpec",
    "CascadeResult",
    "cascade_efficiency",
    "cell_attenuation",
    "efficiency_band",
    "noise_cascade",
    "per_cell_gain",
    "quantum_efficiency",
    "DielectricSpec",
    "density_from_concentration",
    "tan_delta_from_density",
    "tan_delta_from_spectral_diffusion",
    "DipoleEstimate",
    "EchoCalibration",
    "density_from_echo",
    "dipole_from_rabi",
    "rabi_rate",
    "radiative_rate_from_pi_pulse",
    "echo_calibration_loss_report",
    "spectral_diffusion_loss_report",
    "dbm_to_watt",
    "watt_to_dbm",
    "db_to_ratio",
    "ratio_to_db",
    "debye_to_si",
    "si_to_debye",
]
