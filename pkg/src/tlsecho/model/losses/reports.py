"""
Loss reports for the two routes from echo data to amplifier efficiency.

Both reports list every assumed constant that influenced a number, under the key
``assumptions``.
"""
import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from tlsecho.model.config import CHAIN
from tlsecho.model.echo.parameters import SpectralDiffusionParams
from tlsecho.model.errors import DomainError, ValidityError
from tlsecho.model.losses.amplifier import (
    AmplifierChainSpec,
    cell_attenuation,
    efficiency_band,
    per_cell_gain,
    quantum_efficiency,
)
from tlsecho.model.losses.dielectric import DielectricSpec, tan_delta_from_density, tan_delta_from_spectral_diffusion
from tlsecho.model.losses.rabi_calibration import (
    EchoCalibration,
    density_from_echo,
    dipole_from_rabi,
    rabi_rate,
    radiative_rate_from_pi_pulse,
)

logger = logging.getLogger(__name__)


def _chain_assumptions(chain: AmplifierChainSpec) -> List[str]:
    return [
        f"per-cell capacitance c = {chain.capacitance:.6g} F (not a measured value)",
        f"line impedance Z0 = {chain.z0:.6g} Ohm",
        f"evaluation frequency omega = {chain.omega:.6g} rad/s",
        f"quantum noise N_Q = {chain.quantum_noise:.6g} photons",
    ]


def _efficiency_section(
    chain: AmplifierChainSpec, tan_delta: float, capacitance_band: Tuple[float, float], band_points: int
) -> Dict[str, Any]:
    g = per_cell_gain(chain)
    section: Dict[str, Any] = {"per_cell_gain": g, "attenuation": None, "quantum_efficiency": None}
    try:
        a = cell_attenuation(chain, tan_delta)
        section["attenuation"] = a
        section["quantum_efficiency"] = quantum_efficiency(a, g)
    except (DomainError, ValidityError) as error:
        logger.warning("Efficiency undefined for tan_delta %.4g: %s", tan_delta, error)
        section["note"] = str(error)
    capacitances = np.linspace(capacitance_band[0], capacitance_band[1], band_points)
    band = efficiency_band(chain, tan_delta, capacitances)
    section["efficiency_band"] = [{"capacitance_f": c, "quantum_efficiency": eta} for c, eta in band.items()]
    return section


def spectral_diffusion_loss_report(
    params: SpectralDiffusionParams,
    chain: AmplifierChainSpec = AmplifierChainSpec(),
    dielectric: DielectricSpec = DielectricSpec(),
    capacitance_band: Tuple[float, float] = CHAIN.capacitance_band,
    band_points: int = CHAIN.band_points,
    device_label: Optional[str] = None,
) -> Dict[str, Any]:
    """Loss tangent from Gamma_sd0 / omega_B, then attenuation and efficiency of the chain."""
    ratio = dielectric.gamma_b_over_omega_b
    tan_delta = tan_delta_from_spectral_diffusion(params.gamma_sd0, params.omega_b, ratio)
    report: Dict[str, Any] = {
        "route": "spectral_diffusion",
        "device_label": device_label,
        "gamma_sd0_over_2pi_hz": params.gamma_sd0 / (2.0 * np.pi),
        "omega_b_over_2pi_hz": params.omega_b / (2.0 * np.pi),
        "tan_delta": tan_delta,
    }
    report.update(_efficiency_section(chain, tan_delta, capacitance_band, band_points))
    report["assumptions"] = [
        f"bath width gamma_B = {ratio:.6g} * omega_B (set by the thermal energy)",
        *_chain_assumptions(chain),
    ]
    return report


def echo_calibration_loss_report(
    cal: EchoCalibration,
    chain: AmplifierChainSpec = AmplifierChainSpec(),
    dielectric: DielectricSpec = DielectricSpec(),
    capacitance_band: Tuple[float, float] = CHAIN.capacitance_band,
    band_points: int = CHAIN.band_points,
    device_label: Optional[str] = None,
) -> Dict[str, Any]:
    """
    Loss tangent from the echo calibration: Gamma_R from the pi-pulse condition, the
    dipole moment from the Rabi rate, N0 from the echo output, then tan(delta) from
    N0 d_A^2.
    """
    gamma_r = radiative_rate_from_pi_pulse(cal.theta, cal.p_in, cal.omega_d)
    omega = rabi_rate(gamma_r, cal.p_in, cal.omega_d)
    dipole = dipole_from_rabi(omega, cal.driving_field)
    n0 = density_from_echo(cal, gamma_r)
    tan_delta = tan_delta_from_density(n0, dipole.si, dielectric)
    report: Dict[str, Any] = {
        "route": "echo_calibration",
        "device_label": device_label,
        "radiative_rate_per_s": gamma_r,
        "rabi_rate_rad_per_s": omega,
        "dipole_cm": dipole.si,
        "dipole_debye": dipole.debye,
        "tls_density_per_j_m3": n0,
        "tan_delta": tan_delta,
    }
    report.update(_efficiency_section(chain, tan_delta, capacitance_band, band_points))
    report["assumptions"] = [
        f"relative permittivity epsilon_r = {dielectric.epsilon_r:.6g} (dielectric not characterized)",
        f"driving field calibration {cal.field_per_sqrt_watt:.6g} (V/m)/sqrt(W)",
        f"capacitor volume V = {cal.volume:.6g} m^3",
        "the first pulse is a pi pulse for the mean radiative rate",
        *_chain_assumptions(chain),
    ]
    return report
