from .float_validator import as_output, validate_array, validate_float, validate_seed
from .parallel import THREADS_ENV_VAR, chunk_bounds, ordered_map, resolve_workers, substream

__all__ = [
    "validate_float",
    "validate_array",
    "validate_seed",
    "as_output",
    "resolve_workers",
    "ordered_map",
    "substream",
    "chunk_bounds",
    "THREADS_ENV_VAR",
]
