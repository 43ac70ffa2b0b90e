import logging
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from tlsecho.model.echo.amplitudes import hahn_amplitude, stimulated_amplitude
from tlsecho.model.echo.parameters import ModelVariant, SpectralDiffusionParams
from tlsecho.model.errors import DomainError
from tlsecho.model.fitting.dataset import DecayDataset, DecayKind, TemperatureSeries
from tlsecho.model.utils import validate_float, validate_seed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SynthDecaySpec:
    """
    Forward-model dataset description.

    ``amplitudes`` is either one A0 (V*s) for every temperature or a mapping from
    temperature to A0. Hahn ``delays`` are the delay 2 tau; stimulated ``delays`` are
    tau' at the fixed ``tau``.
    """

    params: SpectralDiffusionParams
    variant: ModelVariant
    temperatures: Tuple[float, ...]
    delays: Tuple[float, ...]
    amplitudes: Union[float, Mapping[float, float]]
    noise_std: float = 0.0
    seed: int = 0
    kind: DecayKind = DecayKind.HAHN
    tau: Optional[float] = None
    device_label: str = "synthetic"
    literal_gamma_sd0: bool = False

    def __post_init__(self):
        object.__setattr__(self, "variant", ModelVariant(self.variant))
        object.__setattr__(self, "kind", DecayKind(self.kind))
        object.__setattr__(self, "temperatures", tuple(float(t) for t in self.temperatures))
        object.__setattr__(self, "delays", tuple(float(d) for d in self.delays))
        if not self.temperatures or not self.delays:
            raise DomainError("temperature and delay grids must be non-empty.")
        self.params.check_variant(self.variant)
        object.__setattr__(self, "noise_std", validate_float(self.noise_std, "noise_std", minimum=0.0))
        object.__setattr__(self, "seed", validate_seed(self.seed))
        if self.kind is DecayKind.STIMULATED:
            if self.tau is None:
                raise DomainError("stimulated datasets need the fixed tau.")
            object.__setattr__(self, "tau", validate_float(self.tau, "tau", minimum=0.0))

    def amplitude_at(self, temperature: float) -> float:
        if isinstance(self.amplitudes, Mapping):
            if temperature not in self.amplitudes:
                raise DomainError(f"no amplitude given for T = {temperature} K.")
            return float(self.amplitudes[temperature])
        return float(self.amplitudes)


def _noiseless(spec: SynthDecaySpec, temperature: float, a0: float, delays: np.ndarray) -> np.ndarray:
    if spec.kind is DecayKind.HAHN:
        return np.asarray(hahn_amplitude(spec.params, spec.variant, a0, 0.5 * delays, temperature), dtype=float)
    values = stimulated_amplitude(
        spec.params, spec.variant, a0, spec.tau, delays, temperature, spec.literal_gamma_sd0
    )
    return np.asarray(values, dtype=float)


def generate_decay_dataset(spec: SynthDecaySpec) -> DecayDataset:
    """
    Model amplitudes plus white Gaussian noise of ``noise_std``; the generator truth
    is stored on the dataset. Identical specs give bit-identical datasets.
    """
    rng = np.random.default_rng(spec.seed)
    delays = np.asarray(spec.delays, dtype=float)
    series = []
    amplitudes = []
    for temperature in spec.temperatures:
        a0 = spec.amplitude_at(temperature)
        values = _noiseless(spec, temperature, a0, delays)
        if spec.noise_std > 0.0:
            values = values + rng.normal(0.0, spec.noise_std, size=values.size)
        series.append(TemperatureSeries(temperature, spec.delays, tuple(values.tolist()), tau=spec.tau))
        amplitudes.append(a0)
    logger.info(
        "Generated %s dataset: %d temperatures x %d delays, noise %.3g V*s",
        spec.kind.value,
        len(spec.temperatures),
        len(spec.delays),
        spec.noise_std,
    )
    return DecayDataset(
        kind=spec.kind,
        device_label=spec.device_label,
        series=tuple(series),
        generator_truth=spec.params,
        truth_variant=spec.variant,
        truth_amplitudes=tuple(amplitudes),
    )


def table_grid(
    t_min: float, t_max: float, n_temperatures: int, delay_max: float, n_delays: int
) -> Tuple[Sequence[float], Sequence[float]]:
    """Log-spaced temperatures and linearly spaced delays (first delay > 0)."""
    if n_temperatures < 1 or n_delays < 1:
        raise DomainError("grids need at least one point.")
    temperatures = np.geomspace(t_min, t_max, n_temperatures)
    delays = np.linspace(delay_max / n_delays, delay_max, n_delays)
    return tuple(temperatures.tolist()), tuple(delays.tolist())
