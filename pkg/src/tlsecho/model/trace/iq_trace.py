import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from tlsecho.model.errors import DomainError, GridMismatchError
from tlsecho.model.utils import validate_float

MIN_SAMPLES = 8


class Quadrature(str, Enum):
    I = "I"
    Q = "Q"


@dataclass(frozen=True, eq=False)
class IQTrace:
    """
    Demodulated in-phase and quadrature voltages sampled every ``dt`` seconds from ``t0``.
    """

    dt: float
    t0: float
    i_samples: np.ndarray
    q_samples: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dt", validate_float(self.dt, "dt", minimum=0.0, strict=True))
        object.__setattr__(self, "t0", validate_float(self.t0, "t0"))
        i_samples = np.array(self.i_samples, dtype=float)
        q_samples = np.array(self.q_samples, dtype=float)
        if i_samples.ndim != 1 or i_samples.shape != q_samples.shape:
            raise DomainError(
                f"I and Q must be 1-d sequences of equal length, got shapes {i_samples.shape} and {q_samples.shape}."
            )
        if i_samples.size < MIN_SAMPLES:
            raise DomainError(f"a trace needs at least {MIN_SAMPLES} samples, got {i_samples.size}.")
        if not (np.all(np.isfinite(i_samples)) and np.all(np.isfinite(q_samples))):
            raise DomainError("trace samples must be finite.")
        i_samples.setflags(write=False)
        q_samples.setflags(write=False)
        object.__setattr__(self, "i_samples", i_samples)
        object.__setattr__(self, "q_samples", q_samples)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IQTrace):
            return NotImplemented
        return (
            self.dt == other.dt
            and self.t0 == other.t0
            and np.array_equal(self.i_samples, other.i_samples)
            and np.array_equal(self.q_samples, other.q_samples)
        )

    @property
    def n_samples(self) -> int:
        return int(self.i_samples.size)

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.n_samples)

    @property
    def complex_samples(self) -> np.ndarray:
        return self.i_samples + 1j * self.q_samples

    def quadrature(self, which: Quadrature) -> np.ndarray:
        return self.i_samples if Quadrature(which) is Quadrature.I else self.q_samples

    def rotated(self, angle: float) -> "IQTrace":
        """Rotate the IQ plane by ``angle`` radians: (I + iQ) e^(i angle)."""
        cos, sin = math.cos(angle), math.sin(angle)
        return IQTrace(
            self.dt,
            self.t0,
            cos * self.i_samples - sin * self.q_samples,
            sin * self.i_samples + cos * self.q_samples,
        )

    def scaled(self, factor: float) -> "IQTrace":
        return IQTrace(self.dt, self.t0, factor * self.i_samples, factor * self.q_samples)

    def same_grid(self, other: "IQTrace") -> bool:
        return (
            self.n_samples == other.n_samples
            and math.isclose(self.dt, other.dt, rel_tol=1e-12)
            and math.isclose(self.t0, other.t0, rel_tol=1e-12, abs_tol=1e-12 * self.dt)
        )


def require_common_grid(traces) -> None:
    """
    Raises:
        GridMismatchError: If the traces do not share dt, t0 and length.
    """
    first = traces[0]
    for index, trace in enumerate(traces[1:], start=1):
        if not first.same_grid(trace):
            raise GridMismatchError(
                f"trace {index} has grid (dt={trace.dt}, t0={trace.t0}, n={trace.n_samples}), "
                f"expected (dt={first.dt}, t0={first.t0}, n={first.n_samples})."
            )
