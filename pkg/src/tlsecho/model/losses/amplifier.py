"""
Per-cell loss and gain of a distributed amplifier and the resulting noise cascade.

Each cell multiplies the noise by t = g a and adds chi = (2g - ga - 1) N_Q photons, so
after n cells N_n = t^n N_0 + chi (t^n - 1) / (t - 1).
"""
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from tlsecho.model.config import CHAIN
from tlsecho.model.errors import DomainError, ValidityError
from tlsecho.model.utils import validate_float

logger = logging.getLogger(__name__)

VALIDITY_LIMIT = 0.1


@dataclass(frozen=True)
class AmplifierChainSpec:
    n_cells: int = CHAIN.n_cells
    total_gain: float = CHAIN.total_gain
    capacitance: float = CHAIN.capacitance
    z0: float = CHAIN.z0
    omega: float = CHAIN.omega
    quantum_noise: float = CHAIN.quantum_noise

    def __post_init__(self):
        if int(self.n_cells) != self.n_cells or self.n_cells < 1:
            raise DomainError(f"n_cells must be a positive integer, got {self.n_cells}.")
        object.__setattr__(self, "n_cells", int(self.n_cells))
        object.__setattr__(self, "total_gain", validate_float(self.total_gain, "total_gain", minimum=1.0))
        for name in ("capacitance", "z0", "omega"):
            object.__setattr__(self, name, validate_float(getattr(self, name), name, minimum=0.0, strict=True))
        object.__setattr__(self, "quantum_noise", validate_float(self.quantum_noise, "quantum_noise", minimum=0.0))


class CascadeResult(NamedTuple):
    closed_form: float
    iterated: float


def cell_attenuation(chain: AmplifierChainSpec, tan_delta: float) -> float:
    """
    Power transmission a = 1 - c omega Z0 tan(delta) of one lossy cell.

    Raises:
        ValidityError: If c omega Z0 tan(delta) >= 0.1, where the linear form no longer holds.
    """
    tan_delta = validate_float(tan_delta, "tan_delta", minimum=0.0)
    loss = chain.capacitance * chain.omega * chain.z0 * tan_delta
    if loss >= VALIDITY_LIMIT:
        raise ValidityError(f"c*omega*Z0*tan_delta = {loss:.4g} is not small (limit {VALIDITY_LIMIT}).")
    return 1.0 - loss


def per_cell_gain(chain: AmplifierChainSpec) -> float:
    return chain.total_gain ** (1.0 / chain.n_cells)


def quantum_efficiency(a: float, g: float) -> float:
    """eta = (a g - 1) / (g - 1)."""
    a = validate_float(a, "a", minimum=0.0, strict=True, maximum=1.0)
    g = validate_float(g, "g", minimum=1.0, strict=True)
    if a * g <= 1.0:
        raise DomainError(f"a*g = {a * g:.6g} <= 1: the cell is net lossy and the efficiency is undefined.")
    return (a * g - 1.0) / (g - 1.0)


def noise_cascade(chain: AmplifierChainSpec, a: float, g: float, n_input: float) -> CascadeResult:
    """Output noise in photons after ``chain.n_cells`` cells, by closed form and by iteration."""
    a = validate_float(a, "a", minimum=0.0, strict=True, maximum=1.0)
    g = validate_float(g, "g", minimum=1.0)
    n_input = validate_float(n_input, "n_input", minimum=0.0)
    n = chain.n_cells
    t = g * a
    added = (2.0 * g - t - 1.0) * chain.quantum_noise
    if t == 1.0:
        closed_form = n_input + added * n
    else:
        log_t = math.log1p(t - 1.0)
        growth = math.exp(n * log_t)
        geometric = math.expm1(n * log_t) / (t - 1.0)
        closed_form = growth * n_input + added * geometric
    iterated = n_input
    for _ in range(n):
        iterated = t * iterated + added
    return CascadeResult(closed_form=closed_form, iterated=iterated)


def cascade_efficiency(chain: AmplifierChainSpec, a: float, g: float) -> float:
    """
    Ratio T / N_out of total power gain to output noise for a vacuum input.

    With N_0 = N_Q = 1/2 this approaches (a g - 1) / (g - 1) once T >> 1.
    """
    result = noise_cascade(chain, a, g, chain.quantum_noise)
    transmission = math.exp(chain.n_cells * math.log(g * a))
    return transmission / result.closed_form


def efficiency_band(chain: AmplifierChainSpec, tan_delta: float, capacitances) -> dict:
    """Quantum efficiency for each capacitance in ``capacitances``; None where undefined."""
    g = per_cell_gain(chain)
    band = {}
    for capacitance in np.atleast_1d(capacitances):
        shifted_chain = AmplifierChainSpec(
            n_cells=chain.n_cells,
            total_gain=chain.total_gain,
            capacitance=float(capacitance),
            z0=chain.z0,
            omega=chain.omega,
            quantum_noise=chain.quantum_noise,
        )
        try:
            band[float(capacitance)] = quantum_efficiency(cell_attenuation(shifted_chain, tan_delta), g)
        except (DomainError, ValidityError) as error:
            logger.warning("No efficiency at capacitance %.3g F: %s", capacitance, error)
            band[float(capacitance)] = None
    return band
