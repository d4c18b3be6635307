"""
Configuration package for lingrowth.
"""

from .constants import SCHEMA_VERSION, ExitCode, OutputFiles
from .env import DEFAULTS, TOLERANCES, Defaults, Tolerances
from .utils import config_hash, json_serializer, stable_json

__all__ = [
    "DEFAULTS",
    "SCHEMA_VERSION",
    "TOLERANCES",
    "Defaults",
    "ExitCode",
    "OutputFiles",
    "Tolerances",
    "config_hash",
    "json_serializer",
    "stable_json",
]
