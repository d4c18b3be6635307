"""
Logger configuration for lingrowth.

One loguru logger for the whole package: a stderr sink at the configured
level and, optionally, a JSON-lines file sink. Modules bind a component name
with ``logger.bind(component=...)``.
"""

import sys
from pathlib import Path
from typing import Optional, Union

from loguru import logger

from lingrowth.config.env import DEFAULTS
from lingrowth.config.utils import json_serializer

# Configure and remove default logger
logger.remove()

_STDERR_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<cyan>{extra[component]}</cyan> | {message}"
)

logger.configure(extra={"component": "lingrowth"})

_sink_ids: list[int] = []


def _json_sink(path: Path):
    handle = path.open("a", encoding="utf-8")

    def sink(message):
        handle.write(json_serializer(message.record) + "\n")
        handle.flush()

    return sink


def configure_logging(
    level: Optional[str] = None, json_path: Optional[Union[str, Path]] = None
) -> None:
    """
    (Re)install the package sinks.

    Args:
        level: Minimum level for the stderr sink, defaults to ``LOG_LEVEL``
        json_path: Optional file receiving one JSON record per line
    """
    for sink_id in _sink_ids:
        logger.remove(sink_id)
    _sink_ids.clear()

    _sink_ids.append(
        logger.add(sys.stderr, level=level or DEFAULTS.LOG_LEVEL, format=_STDERR_FORMAT)
    )
    json_path = json_path or DEFAULTS.LOG_JSON
    if json_path is not None:
        path = Path(json_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        _sink_ids.append(logger.add(_json_sink(path), level="DEBUG"))


configure_logging()
