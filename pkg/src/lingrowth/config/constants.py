"""
Constants shared by the simulation modules and the command line.
"""

from enum import Enum, IntEnum
from pathlib import Path

SCHEMA_VERSION = "1"


class ExitCode(IntEnum):
    """Process exit codes of the ``lingrowth`` command."""

    OK = 0
    CONFIG_ERROR = 1
    NUMERICAL_GUARD = 2
    INCONCLUSIVE = 3


class OutputFiles(str, Enum):
    """File names written into the ``--out`` directory."""

    TRAJECTORY = "trajectory.csv"
    SUMMARY = "summary.json"
    REPORT_ROW = "report.csv"
    PATH_TRACE = "path_trace.csv"
    PATH_SUMMARY = "path_summary.json"
    CLASSIFICATION = "classification.json"
    CT_TRAJECTORY = "ct_trajectory.csv"
    CT_EVENTS = "ct_events.csv"
    CT_CHECK = "ct_check.json"
    ORACLE = "oracle.json"

    def under(self, directory) -> Path:
        return Path(directory) / self.value
