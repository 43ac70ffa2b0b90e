from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from tlsecho.model.echo.parameters import ModelVariant, SpectralDiffusionParams
from tlsecho.model.errors import DomainError
from tlsecho.model.utils import validate_float


class DecayKind(str, Enum):
    """HAHN series store the delay 2 tau; STIMULATED series store tau' with a fixed tau."""

    HAHN = "hahn"
    STIMULATED = "stimulated"


def _float_tuple(values: Sequence[float], name: str, minimum: Optional[float] = None) -> Tuple[float, ...]:
    return tuple(validate_float(value, f"{name}[{index}]", minimum=minimum) for index, value in enumerate(values))


@dataclass(frozen=True)
class TemperatureSeries:
    """
    One decay trace: echo amplitudes (V*s) at increasing delays (s) at one temperature (K).

    Points are held as tuples, so series compare and hash by value.
    """

    temperature: float
    delays: Tuple[float, ...]
    amplitudes: Tuple[float, ...]
    errors: Optional[Tuple[float, ...]] = None
    tau: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "temperature", validate_float(self.temperature, "temperature", 0.0, strict=True))
        delays = _float_tuple(self.delays, "delays", minimum=0.0)
        amplitudes = _float_tuple(self.amplitudes, "amplitudes")
        if len(delays) != len(amplitudes):
            raise DomainError(f"{len(delays)} delays but {len(amplitudes)} amplitudes.")
        if not delays:
            raise DomainError("a series needs at least one point.")
        if any(later <= earlier for earlier, later in zip(delays, delays[1:])):
            raise DomainError("delays must be strictly increasing.")
        object.__setattr__(self, "delays", delays)
        object.__setattr__(self, "amplitudes", amplitudes)
        if self.errors is not None:
            errors = _float_tuple(self.errors, "errors", minimum=0.0)
            if len(errors) != len(delays):
                raise DomainError(f"{len(delays)} delays but {len(errors)} errors.")
            object.__setattr__(self, "errors", errors)
        if self.tau is not None:
            object.__setattr__(self, "tau", validate_float(self.tau, "tau", minimum=0.0))

    @property
    def n_points(self) -> int:
        return len(self.delays)

    @property
    def delay_array(self) -> np.ndarray:
        return np.asarray(self.delays, dtype=float)

    @property
    def amplitude_array(self) -> np.ndarray:
        return np.asarray(self.amplitudes, dtype=float)

    @property
    def error_array(self) -> Optional[np.ndarray]:
        return None if self.errors is None else np.asarray(self.errors, dtype=float)


@dataclass(frozen=True)
class DecayDataset:
    kind: DecayKind
    device_label: str
    series: Tuple[TemperatureSeries, ...]
    generator_truth: Optional[SpectralDiffusionParams] = None
    truth_variant: Optional[ModelVariant] = None
    truth_amplitudes: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", DecayKind(self.kind))
        object.__setattr__(self, "series", tuple(self.series))
        if not self.series:
            raise DomainError("a dataset needs at least one series.")
        if self.kind is DecayKind.STIMULATED:
            for index, series in enumerate(self.series):
                if series.tau is None:
                    raise DomainError(f"stimulated series {index} has no tau.")
        if self.truth_variant is not None:
            object.__setattr__(self, "truth_variant", ModelVariant(self.truth_variant))
        if self.truth_amplitudes is not None:
            amplitudes = tuple(float(a) for a in self.truth_amplitudes)
            if len(amplitudes) != len(self.series):
                raise DomainError("truth_amplitudes must give one amplitude per series.")
            object.__setattr__(self, "truth_amplitudes", amplitudes)

    @property
    def temperatures(self) -> Tuple[float, ...]:
        return tuple(series.temperature for series in self.series)

    def subset(self, indices: Sequence[int]) -> "DecayDataset":
        """Dataset of the series at ``indices``, without generator truth."""
        return DecayDataset(self.kind, self.device_label, tuple(self.series[i] for i in indices))


@dataclass(frozen=True)
class FitResult:
    """
    Outcome of a global fit. ``amplitudes`` maps each fitted temperature to its profiled
    A0(T); ``flags`` lists diagnostics such as ``single-temperature`` or ``ill-conditioned``.
    """

    params: SpectralDiffusionParams
    variant: ModelVariant
    amplitudes: Dict[float, float]
    cost: float
    converged: bool
    n_evals: int
    flags: Tuple[str, ...] = ()
    message: str = ""
    condition_number: float = float("nan")


@dataclass(frozen=True)
class BootstrapSummary:
    """
    Per-parameter mean and standard deviation over the successful resamples.

    ``samples`` has one row per resample (NaN rows for failures) and one column per
    entry of ``parameter_names``; ``statuses`` holds ``"ok"`` or the failure message.
    """

    variant: ModelVariant
    parameter_names: Tuple[str, ...]
    means: Dict[str, float]
    stds: Dict[str, float]
    samples: np.ndarray = field(compare=False)
    statuses: Tuple[str, ...]
    n_resamples: int
    subset_size: int
    seed: int

    @property
    def n_failed(self) -> int:
        return sum(status != "ok" for status in self.statuses)
