"""
JSON file access shared by every tlsecho file format.
"""
import json
import logging
import math
from os import makedirs, path
from typing import Any, Dict, Optional

from tlsecho.model.errors import SchemaError

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


class DataPersistence:
    """Loads and saves one JSON document, creating its directory on demand."""

    def __init__(self, file_path: str):
        self.file_path: str = file_path

    def load_data(self) -> Dict[str, Any]:
        """
        Load the document.

        Raises:
            SchemaError: If the file is missing, unreadable or not a JSON object.
        """
        if not path.exists(self.file_path):
            raise SchemaError(self.file_path, "file does not exist.")
        try:
            with open(self.file_path, "r", encoding="utf-8") as json_file:
                data = json.load(json_file)
        except json.JSONDecodeError as error:
            logger.error("Error reading %s: %s", self.file_path, error)
            raise SchemaError(f"{self.file_path} line {error.lineno}", error.msg) from None
        except OSError as error:
            logger.error("Error reading %s: %s", self.file_path, error)
            raise SchemaError(self.file_path, str(error)) from None
        if not isinstance(data, dict):
            raise SchemaError(self.file_path, "top level must be a JSON object.")
        logger.info("Loaded %s", self.file_path)
        return data

    def save_data(self, data: Dict[str, Any]) -> str:
        """Save with pretty-printing and sorted keys; returns the path written."""
        directory = path.dirname(self.file_path)
        if directory:
            makedirs(directory, exist_ok=True)
        try:
            with open(self.file_path, "w", encoding="utf-8") as json_file:
                json.dump(data, json_file, indent=4, sort_keys=True)
                json_file.write("\n")
        except OSError as error:
            logger.error("Error saving %s: %s", self.file_path, error)
            raise
        logger.info("Data saved successfully to %s", self.file_path)
        return self.file_path


def check_header(data: Dict[str, Any], kind: Optional[str], location: str) -> None:
    """
    Raises:
        SchemaError: If ``format_version`` is not supported or ``kind`` differs.
    """
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise SchemaError(f"{location}.format_version", f"expected {FORMAT_VERSION}, got {version!r}.")
    if kind is not None and data.get("kind") != kind:
        raise SchemaError(f"{location}.kind", f"expected {kind!r}, got {data.get('kind')!r}.")


def require(mapping: Dict[str, Any], key: str, location: str) -> Any:
    if not isinstance(mapping, dict):
        raise SchemaError(location, "expected an object.")
    if key not in mapping:
        raise SchemaError(f"{location}.{key}", "required field is missing.")
    return mapping[key]


def read_number(value: Any, location: str, minimum: Optional[float] = None, strict: bool = False) -> float:
    """
    Raises:
        SchemaError: If ``value`` is not a finite number above ``minimum``.
    """
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(location, f"expected a number, got {value!r}.")
    number = float(value)
    if not math.isfinite(number):
        raise SchemaError(location, f"must be finite, got {number}.")
    if minimum is not None and (number < minimum or (strict and number == minimum)):
        relation = ">" if strict else ">="
        raise SchemaError(location, f"must be {relation} {minimum}, got {number}.")
    return number


def read_list(value: Any, location: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(location, f"expected a list, got {type(value).__name__}.")
    return value
