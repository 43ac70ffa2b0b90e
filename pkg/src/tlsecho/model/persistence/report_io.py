"""
Result reports (JSON) and curve files (CSV) for external plotting.
"""
import csv
import logging
from enum import Enum
from os import makedirs, path
from typing import Any, Dict, Iterable, Sequence

import numpy as np

from tlsecho.model.persistence.data_persistence import FORMAT_VERSION, DataPersistence, check_header

logger = logging.getLogger(__name__)

KIND = "report"


def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars and arrays, tuples and enums to plain JSON types."""
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Enum):
        return value.value
    return value


def write_report(file_path: str, command: str, payload: Dict[str, Any]) -> str:
    report = {"format_version": FORMAT_VERSION, "kind": KIND, "command": command, "result": to_jsonable(payload)}
    return DataPersistence(file_path).save_data(report)


def read_report(file_path: str) -> Dict[str, Any]:
    data = DataPersistence(file_path).load_data()
    check_header(data, KIND, file_path)
    return data


def write_table_csv(file_path: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV with one header row; floats are written with full precision."""
    directory = path.dirname(file_path)
    if directory:
        makedirs(directory, exist_ok=True)
    with open(file_path, "w", newline="", encoding="utf-8") as csv_file:
        writer = csv.writer(csv_file)
        writer.writerow(list(header))
        for row in rows:
            writer.writerow([repr(float(value)) if isinstance(value, (float, np.floating)) else value for value in row])
    logger.info("Table written to %s", file_path)
    return file_path


def write_curve_csv(file_path: str, columns: Sequence[str], x: np.ndarray, y: np.ndarray) -> str:
    """Two-column ``x, y`` CSV with a header naming both columns and their units."""
    rows = zip(np.atleast_1d(x).astype(float), np.atleast_1d(y).astype(float))
    return write_table_csv(file_path, columns, rows)
