"""
Utility functions for the lingrowth configuration.

This module provides the log record serializer used by the JSON log sink and
the hashing helpers that stamp every output file with the configuration that
produced it.
"""

import hashlib
import json
from typing import Any, Dict


def json_serializer(record: Dict[str, Any]) -> str:
    """
    Serialize a loguru record to one JSON line.

    Args:
        record: The log record to serialize

    Returns:
        str: JSON formatted log string
    """
    log_data = {
        "timestamp": record["time"].strftime("%Y-%m-%d %H:%M:%S.%f"),
        "level": record["level"].name,
        "message": record["message"],
        "name": record["name"],
        "function": record["function"],
        "line": record["line"],
        "component": record["extra"].get("component"),
    }

    if record["exception"]:
        log_data["exception"] = str(record["exception"]).rstrip()

    return json.dumps(log_data)


def stable_json(payload: Any) -> str:
    """Canonical JSON text: sorted keys, no whitespace."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)


def config_hash(payload: Any) -> str:
    """Short sha256 of the canonical JSON form of a configuration."""
    return hashlib.sha256(stable_json(payload).encode()).hexdigest()[:16]
