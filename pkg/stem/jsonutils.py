"""
stem/jsonutils.py

JSON utility functions for flipcount.
Provides safe JSON serialization and deserialization with error handling,
understanding pydantic models, sets and exact fractions.
"""

import json
import logging
from fractions import Fraction
from typing import Any

from pydantic import BaseModel

# Set up logging for this module
logger = logging.getLogger(__name__)


def _default(obj: Any) -> Any:
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json")
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def to_json(obj, indent: int | None = None) -> str:
    """
    Serialize an object to a JSON string.
    Args:
        obj: The object to serialize.
        indent: Optional pretty-print indent.
    Returns:
        str: JSON string, or empty string on error.
    """
    try:
        return json.dumps(obj, default=_default, indent=indent)
    except Exception as e:
        logger.error(f"Error serializing to JSON: {e}")
        return ""


def from_json(json_str: str, key: str | None = None) -> Any:
    """
    Parse a JSON document, optionally descending into one top-level key.

    Reports written by to_json nest payloads (an analyze report keeps its
    triangulation under "triangulation"); a document without the key is
    returned whole. Returns None on malformed input.
    """
    try:
        data = json.loads(json_str)
    except (TypeError, ValueError) as e:
        logger.error(f"Error deserializing from JSON: {e}")
        return None
    if key is not None and isinstance(data, dict) and key in data:
        return data[key]
    return data
