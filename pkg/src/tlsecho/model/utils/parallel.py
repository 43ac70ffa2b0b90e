import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np

from tlsecho.model.errors import DomainError

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "TLSECHO_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: Optional[int] = None) -> int:
    """Worker count: explicit value, else ``TLSECHO_THREADS``, else the CPU count."""
    if workers is None:
        env_value = os.environ.get(THREADS_ENV_VAR, "").strip()
        if env_value and env_value.lower() != "auto":
            try:
                workers = int(env_value)
            except ValueError:
                raise DomainError(f"{THREADS_ENV_VAR} must be an integer or 'auto', got {env_value!r}.") from None
        else:
            workers = os.cpu_count() or 1
    if workers < 1:
        raise DomainError(f"worker count must be >= 1, got {workers}.")
    return int(workers)


def ordered_map(function: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """Apply ``function`` to every item on a thread pool, keeping the input order."""
    count = resolve_workers(workers)
    if count == 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=count) as executor:
        return list(executor.map(function, items))


def substream(seed: int, index: int) -> np.random.Generator:
    """Independent generator for work unit ``index``; depends only on (seed, index)."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def chunk_bounds(total: int, chunk_size: int) -> List[range]:
    """Split ``range(total)`` into consecutive chunks of at most ``chunk_size``."""
    return [range(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]
