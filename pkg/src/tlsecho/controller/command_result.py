from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from tlsecho.model.echo import PRESET_NAMES, ModelVariant, SpectralDiffusionParams, preset
from tlsecho.model.errors import DomainError
from tlsecho.model.persistence import read_params


@dataclass
class CommandResult:
    """
    What a command hands back to the entry point.

    ``payload`` is the machine-readable result written to ``--out``; ``table`` holds
    the rows a human summary and ``--format csv`` show; ``curve`` is the (x, y) data
    behind ``--emit-curve``. A non-zero ``exit_code`` reports a numerical failure
    whose partial results are still written. ``out_written`` marks commands whose
    data file is the ``--out`` target itself.
    """

    command: str
    payload: Dict[str, Any]
    table: Optional[Tuple[Sequence[str], List[Sequence[Any]]]] = None
    curve: Optional[Tuple[Sequence[str], np.ndarray, np.ndarray]] = None
    files: List[str] = field(default_factory=list)
    exit_code: int = 0
    out_written: bool = False


def load_params(args) -> Tuple[SpectralDiffusionParams, ModelVariant]:
    """
    Parameters from ``--params FILE`` or ``--preset NAME``, with ``--variant`` checked
    against them when given.
    """
    if getattr(args, "params", None):
        params, variant, _ = read_params(args.params)
    elif getattr(args, "preset", None):
        if args.preset not in PRESET_NAMES:
            raise DomainError(f"--preset must be one of {', '.join(PRESET_NAMES)}, got {args.preset!r}.")
        params, variant = preset(args.preset)
    else:
        raise DomainError("give the rates with --params FILE or --preset NAME.")
    requested = getattr(args, "variant", None)
    if requested is not None and ModelVariant(requested) is not variant:
        raise DomainError(f"--variant {requested} does not match the {variant.value} parameters supplied.")
    return params, variant


def quoted(params: SpectralDiffusionParams) -> Dict[str, float]:
    """Rates as X/2pi in Hz (Hz/K for w_ex), keyed by the file-format field names."""
    return {
        ("w_ex_over_2pi_hz_per_k" if name == "w_ex" else f"{name}_over_2pi_hz"): value
        for name, value in params.as_over_2pi().items()
    }
