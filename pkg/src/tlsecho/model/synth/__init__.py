"""Synthetic decay datasets and IQ trace sets generated from the forward models."""
from .decay import SynthDecaySpec, generate_decay_dataset, table_grid
from .traces import SynthTraceSpec, generate_trace_set

__all__ = ["SynthDecaySpec", "generate_decay_dataset", "table_grid", "SynthTraceSpec", "generate_trace_set"]
