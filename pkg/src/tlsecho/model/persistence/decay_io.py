"""
Decay dataset files: one JSON document per dataset, series listed by temperature,
with the optional generator truth of synthetic data.
"""
import logging
from typing import Any, Dict, List, Optional

from tlsecho.model.errors import DomainError, SchemaError
from tlsecho.model.fitting.dataset import DecayDataset, DecayKind, TemperatureSeries
from tlsecho.model.persistence.data_persistence import (
    FORMAT_VERSION,
    DataPersistence,
    check_header,
    read_list,
    read_number,
    require,
)
from tlsecho.model.persistence.params_io import params_from_dict, params_to_dict

logger = logging.getLogger(__name__)


def _series_to_dict(series: TemperatureSeries) -> Dict[str, Any]:
    points: List[Dict[str, float]] = []
    for index, (delay, amplitude) in enumerate(zip(series.delays, series.amplitudes)):
        point = {"delay_s": delay, "amplitude_Vs": amplitude}
        if series.errors is not None:
            point["err_Vs"] = series.errors[index]
        points.append(point)
    block: Dict[str, Any] = {"temperature_k": series.temperature, "points": points}
    if series.tau is not None:
        block["tau_s"] = series.tau
    return block


def dataset_to_dict(dataset: DecayDataset) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "kind": dataset.kind.value,
        "device_label": dataset.device_label,
        "series": [_series_to_dict(series) for series in dataset.series],
    }
    if dataset.generator_truth is not None:
        payload["generator_truth"] = params_to_dict(dataset.generator_truth, dataset.truth_variant)
    if dataset.truth_amplitudes is not None:
        payload["truth_amplitudes_Vs"] = list(dataset.truth_amplitudes)
    return payload


def _series_from_dict(block: Any, kind: DecayKind, location: str) -> TemperatureSeries:
    temperature = read_number(require(block, "temperature_k", location), f"{location}.temperature_k", 0.0, True)
    tau: Optional[float] = None
    if "tau_s" in block:
        tau = read_number(block["tau_s"], f"{location}.tau_s", minimum=0.0)
    elif kind is DecayKind.STIMULATED:
        raise SchemaError(f"{location}.tau_s", "required for stimulated series.")
    points = read_list(require(block, "points", location), f"{location}.points")
    if not points:
        raise SchemaError(f"{location}.points", "a series needs at least one point.")
    delays, amplitudes, errors = [], [], []
    for index, point in enumerate(points):
        where = f"{location}.points[{index}]"
        delays.append(read_number(require(point, "delay_s", where), f"{where}.delay_s", minimum=0.0))
        amplitudes.append(read_number(require(point, "amplitude_Vs", where), f"{where}.amplitude_Vs"))
        if "err_Vs" in point:
            errors.append(read_number(point["err_Vs"], f"{where}.err_Vs", minimum=0.0))
    if errors and len(errors) != len(points):
        raise SchemaError(f"{location}.points", "err_Vs must be given on every point or on none.")
    try:
        return TemperatureSeries(temperature, tuple(delays), tuple(amplitudes), tuple(errors) or None, tau)
    except DomainError as error:
        raise SchemaError(f"{location}.points", str(error)) from None


def dataset_from_dict(data: Dict[str, Any], location: str) -> DecayDataset:
    """
    Raises:
        SchemaError: Naming the offending field path, e.g. ``series[2].temperature_k``.
    """
    check_header(data, None, location)
    try:
        kind = DecayKind(data.get("kind"))
    except ValueError:
        raise SchemaError(f"{location}.kind", f"expected 'hahn' or 'stimulated', got {data.get('kind')!r}.") from None
    blocks = read_list(require(data, "series", location), f"{location}.series")
    if not blocks:
        raise SchemaError(f"{location}.series", "a dataset needs at least one series.")
    series = tuple(_series_from_dict(block, kind, f"{location}.series[{i}]") for i, block in enumerate(blocks))
    truth = variant = amplitudes = None
    if data.get("generator_truth") is not None:
        truth, variant, _ = params_from_dict(data["generator_truth"], f"{location}.generator_truth")
    if data.get("truth_amplitudes_Vs") is not None:
        where = f"{location}.truth_amplitudes_Vs"
        values = read_list(data["truth_amplitudes_Vs"], where)
        amplitudes = tuple(read_number(value, f"{where}[{i}]") for i, value in enumerate(values))
    try:
        return DecayDataset(kind, str(data.get("device_label") or ""), series, truth, variant, amplitudes)
    except DomainError as error:
        raise SchemaError(location, str(error)) from None


def write_decay_dataset(file_path: str, dataset: DecayDataset) -> str:
    return DataPersistence(file_path).save_data(dataset_to_dict(dataset))


def read_decay_dataset(file_path: str) -> DecayDataset:
    dataset = dataset_from_dict(DataPersistence(file_path).load_data(), file_path)
    logger.info("Read %s dataset with %d series from %s", dataset.kind.value, len(dataset.series), file_path)
    return dataset
