import math
from dataclasses import dataclass, fields
from enum import Enum
from typing import Dict, Optional, Tuple

from tlsecho.model.config import TWO_PI
from tlsecho.model.echo.constants import CONSTANTS
from tlsecho.model.errors import DomainError
from tlsecho.model.utils import validate_float


class ModelVariant(str, Enum):
    """
    Which intrinsic-decoherence description the echo models use.

    BASE_INTRINSIC keeps a temperature-independent Gamma_2. REFINED_TEMPERATURE_DEPENDENT
    lets the intrinsic rates grow linearly with temperature:
    Gamma_2(T) = W_ex T / 2 + Gamma_2* and Gamma_1(T) = W_ex T + 2 Gamma_2*.
    """

    BASE_INTRINSIC = "base"
    REFINED_TEMPERATURE_DEPENDENT = "refined"

    @property
    def parameter_names(self) -> Tuple[str, ...]:
        if self is ModelVariant.BASE_INTRINSIC:
            return ("gamma2", "gamma_sd0", "gamma1_b", "omega_b")
        return ("gamma2_star", "w_ex", "gamma_sd0", "gamma1_b", "omega_b")


_VARIANT_ONLY_FIELDS = {
    ModelVariant.BASE_INTRINSIC: ("gamma2",),
    ModelVariant.REFINED_TEMPERATURE_DEPENDENT: ("gamma2_star", "w_ex"),
}


@dataclass(frozen=True)
class SpectralDiffusionParams:
    """
    Fitted rate set of one device. Every rate is an angular value (rad/s); ``w_ex`` is
    in rad/(s K). Quoted values X/2pi are converted with :meth:`from_over_2pi`.
    """

    gamma_sd0: float
    omega_b: float
    gamma1_b: float
    gamma2: Optional[float] = None
    gamma2_star: Optional[float] = None
    w_ex: Optional[float] = None

    def __post_init__(self):
        for field in fields(self):
            value = getattr(self, field.name)
            if value is None:
                continue
            if field.name == "omega_b":
                value = validate_float(value, field.name, minimum=0.0, strict=True)
            else:
                value = validate_float(value, field.name, minimum=0.0)
            object.__setattr__(self, field.name, value)

    @property
    def variant(self) -> Optional[ModelVariant]:
        """The variant whose fields are exactly the ones set, or None when ambiguous."""
        for variant in ModelVariant:
            try:
                self.check_variant(variant)
            except DomainError:
                continue
            return variant
        return None

    def check_variant(self, variant: ModelVariant) -> "SpectralDiffusionParams":
        """
        Ensure exactly the fields of ``variant`` are set.

        Raises:
            DomainError: If a required field is missing or a field of the other variant is set.
        """
        variant = ModelVariant(variant)
        for name in _VARIANT_ONLY_FIELDS[variant]:
            if getattr(self, name) is None:
                raise DomainError(f"{variant.value} variant requires {name}.")
        for other, names in _VARIANT_ONLY_FIELDS.items():
            if other is variant:
                continue
            for name in names:
                if getattr(self, name) is not None:
                    raise DomainError(f"{name} does not belong to the {variant.value} variant.")
        return self

    def values(self, variant: ModelVariant) -> Tuple[float, ...]:
        self.check_variant(variant)
        return tuple(getattr(self, name) for name in ModelVariant(variant).parameter_names)

    @classmethod
    def from_values(cls, variant: ModelVariant, values) -> "SpectralDiffusionParams":
        names = ModelVariant(variant).parameter_names
        return cls(**{name: float(value) for name, value in zip(names, values)})

    @classmethod
    def from_over_2pi(cls, **quoted: float) -> "SpectralDiffusionParams":
        """Build from values quoted as X/2pi (Hz, or Hz/K for ``w_ex``)."""
        return cls(**{name: None if value is None else TWO_PI * value for name, value in quoted.items()})

    def as_over_2pi(self) -> Dict[str, float]:
        return {f.name: getattr(self, f.name) / TWO_PI for f in fields(self) if getattr(self, f.name) is not None}


@dataclass(frozen=True)
class TlsLevel:
    """Double-well TLS with asymmetry ``delta`` and tunneling ``delta0`` (rad/s)."""

    delta: float
    delta0: float

    def __post_init__(self):
        object.__setattr__(self, "delta", validate_float(self.delta, "delta"))
        object.__setattr__(self, "delta0", validate_float(self.delta0, "delta0", minimum=0.0, strict=True))

    @property
    def omega0(self) -> float:
        return math.hypot(self.delta, self.delta0)

    @property
    def mixing_angle(self) -> float:
        """Angle whose sine is delta0 / omega0; pi/2 for a symmetric well."""
        return math.atan2(self.delta0, self.delta)

    @classmethod
    def from_energies(cls, delta_joule: float, delta0_joule: float, hbar: Optional[float] = None) -> "TlsLevel":
        hbar = CONSTANTS.hbar if hbar is None else hbar
        return cls(delta=delta_joule / hbar, delta0=delta0_joule / hbar)
