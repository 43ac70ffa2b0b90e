"""
IQ trace sets: one CSV file per trace with header ``t_s,i_v,q_v`` and a JSON manifest
listing the member files with their exact time grid.
"""
import csv
import logging
from os import makedirs, path
from typing import List, Sequence

import numpy as np

from tlsecho.model.errors import DomainError, SchemaError
from tlsecho.model.persistence.data_persistence import (
    FORMAT_VERSION,
    DataPersistence,
    check_header,
    read_list,
    read_number,
    require,
)
from tlsecho.model.trace.iq_trace import IQTrace

logger = logging.getLogger(__name__)

KIND = "trace_set"
HEADER = ["t_s", "i_v", "q_v"]


def write_trace_csv(file_path: str, trace: IQTrace) -> None:
    with open(file_path, "w", newline="", encoding="utf-8") as csv_file:
        writer = csv.writer(csv_file)
        writer.writerow(HEADER)
        for t, i, q in zip(trace.times, trace.i_samples, trace.q_samples):
            writer.writerow([repr(float(t)), repr(float(i)), repr(float(q))])


def read_trace_csv(file_path: str, dt: float, t0: float) -> IQTrace:
    """
    Raises:
        SchemaError: With ``line N`` of the first malformed row, or if the time
            column does not follow ``t0 + k dt``.
    """
    i_values: List[float] = []
    q_values: List[float] = []
    with open(file_path, "r", newline="", encoding="utf-8") as csv_file:
        reader = csv.reader(csv_file)
        header = next(reader, None)
        if header != HEADER:
            raise SchemaError(f"{file_path} line 1", f"expected header {','.join(HEADER)}, got {header!r}.")
        for k, row in enumerate(reader):
            where = f"{file_path} line {k + 2}"
            if len(row) != 3:
                raise SchemaError(where, f"expected 3 columns, got {len(row)}.")
            try:
                t, i, q = (float(cell) for cell in row)
            except ValueError as error:
                raise SchemaError(where, str(error)) from None
            if abs(t - (t0 + k * dt)) > 1e-6 * dt:
                raise SchemaError(where, f"time {t!r} s is off the grid t0 + {k} dt.")
            i_values.append(i)
            q_values.append(q)
    try:
        return IQTrace(dt, t0, np.array(i_values), np.array(q_values))
    except DomainError as error:
        raise SchemaError(file_path, str(error)) from None


def write_trace_set(manifest_path: str, traces: Sequence[IQTrace], stem: str = "trace") -> str:
    """Write every trace next to the manifest as ``<stem>_<index>.csv``; returns the manifest path."""
    directory = path.dirname(manifest_path)
    if directory:
        makedirs(directory, exist_ok=True)
    members = []
    width = max(3, len(str(len(traces) - 1)))
    for index, trace in enumerate(traces):
        name = f"{stem}_{index:0{width}d}.csv"
        write_trace_csv(path.join(directory, name), trace)
        members.append({"file": name, "dt_s": trace.dt, "t0_s": trace.t0})
    manifest = {"format_version": FORMAT_VERSION, "kind": KIND, "traces": members}
    logger.info("Wrote %d traces", len(traces))
    return DataPersistence(manifest_path).save_data(manifest)


def read_trace_set(manifest_path: str) -> List[IQTrace]:
    data = DataPersistence(manifest_path).load_data()
    check_header(data, KIND, manifest_path)
    directory = path.dirname(manifest_path)
    traces = []
    for index, member in enumerate(read_list(require(data, "traces", manifest_path), f"{manifest_path}.traces")):
        where = f"{manifest_path}.traces[{index}]"
        name = require(member, "file", where)
        if not isinstance(name, str):
            raise SchemaError(f"{where}.file", f"expected a file name, got {name!r}.")
        dt = read_number(require(member, "dt_s", where), f"{where}.dt_s", minimum=0.0, strict=True)
        t0 = read_number(require(member, "t0_s", where), f"{where}.t0_s")
        file_path = path.join(directory, name)
        if not path.exists(file_path):
            raise SchemaError(f"{where}.file", f"{file_path} does not exist.")
        traces.append(read_trace_csv(file_path, dt, t0))
    logger.info("Read %d traces from %s", len(traces), manifest_path)
    return traces
