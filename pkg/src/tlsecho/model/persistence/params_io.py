"""
Parameter files.

Rates are written as quoted values X/2pi under ``<name>_over_2pi_hz`` (``w_ex`` under
``w_ex_over_2pi_hz_per_k``) and multiplied by 2pi on load. An ``exact`` block keeps
the angular values as hex floats so a round trip is bit-exact; a hand-edited decimal
field that no longer matches its hex value wins.
"""
import logging
import math
from dataclasses import fields
from typing import Any, Dict, NamedTuple, Optional

from tlsecho.model.config import TWO_PI
from tlsecho.model.echo.parameters import ModelVariant, SpectralDiffusionParams
from tlsecho.model.errors import DomainError, SchemaError
from tlsecho.model.persistence.data_persistence import (
    FORMAT_VERSION,
    DataPersistence,
    check_header,
    read_number,
)

logger = logging.getLogger(__name__)

KIND = "params"
_PARAM_NAMES = tuple(f.name for f in fields(SpectralDiffusionParams))


class ParamsFile(NamedTuple):
    params: SpectralDiffusionParams
    variant: ModelVariant
    device_label: Optional[str]


def decimal_key(name: str) -> str:
    return "w_ex_over_2pi_hz_per_k" if name == "w_ex" else f"{name}_over_2pi_hz"


def params_to_dict(params: SpectralDiffusionParams, variant: Optional[ModelVariant] = None) -> Dict[str, Any]:
    variant = ModelVariant(variant) if variant is not None else params.variant
    if variant is None:
        raise DomainError("parameters match neither model variant; set exactly one of gamma2 or gamma2_star/w_ex.")
    params.check_variant(variant)
    block: Dict[str, Any] = {"variant": variant.value, "exact": {}}
    for name in variant.parameter_names:
        value = getattr(params, name)
        block[decimal_key(name)] = value / TWO_PI
        block["exact"][name] = value.hex()
    return block


def params_from_dict(data: Dict[str, Any], location: str) -> ParamsFile:
    """
    Raises:
        SchemaError: Naming the field that is missing, negative or inconsistent.
    """
    if not isinstance(data, dict):
        raise SchemaError(location, "expected an object.")
    exact = data.get("exact", {})
    if not isinstance(exact, dict):
        raise SchemaError(f"{location}.exact", "expected an object.")
    values: Dict[str, float] = {}
    for name in _PARAM_NAMES:
        key = decimal_key(name)
        if key not in data:
            continue
        quoted = read_number(data[key], f"{location}.{key}", minimum=0.0, strict=name == "omega_b")
        value = TWO_PI * quoted
        if name in exact:
            try:
                stored = float.fromhex(exact[name])
            except (TypeError, ValueError):
                raise SchemaError(f"{location}.exact.{name}", f"not a hex float: {exact[name]!r}.") from None
            if math.isclose(stored, value, rel_tol=1e-12, abs_tol=0.0):
                value = stored
            else:
                logger.warning("%s.%s differs from its exact value; using the decimal field.", location, key)
        values[name] = value
    try:
        params = SpectralDiffusionParams(**values)
    except TypeError as error:
        raise SchemaError(location, f"incomplete parameter set: {error}") from None
    variant_field = data.get("variant")
    if variant_field is None:
        variant = params.variant
        if variant is None:
            raise SchemaError(location, "parameters match neither model variant.")
    else:
        try:
            variant = ModelVariant(variant_field)
            params.check_variant(variant)
        except (ValueError, DomainError) as error:
            raise SchemaError(f"{location}.variant", str(error)) from None
    label = data.get("device_label")
    return ParamsFile(params, variant, None if label is None else str(label))


def write_params(
    file_path: str,
    params: SpectralDiffusionParams,
    variant: Optional[ModelVariant] = None,
    device_label: Optional[str] = None,
) -> str:
    payload = {"format_version": FORMAT_VERSION, "kind": KIND, "device_label": device_label}
    payload.update(params_to_dict(params, variant))
    return DataPersistence(file_path).save_data(payload)


def read_params(file_path: str) -> ParamsFile:
    data = DataPersistence(file_path).load_data()
    check_header(data, KIND, file_path)
    return params_from_dict(data, file_path)
