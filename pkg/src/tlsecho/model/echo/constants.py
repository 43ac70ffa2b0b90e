from dataclasses import dataclass

from scipy import constants as codata


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA constants in SI units; ``debye`` is the C*m value of one debye."""

    hbar: float = codata.hbar
    k_b: float = codata.k
    epsilon0: float = codata.epsilon_0
    debye: float = 1e-21 / codata.c


CONSTANTS = PhysicalConstants()
