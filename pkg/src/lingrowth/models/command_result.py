"""
Result records returned by the command-line subcommands.

A CommandResult carries the outcome status, a message, the exit code the
process should terminate with and the files written by the command.
"""

import json
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from lingrowth.config.constants import ExitCode
from lingrowth.models.exception_data import ExceptionData


class CommandStatus(str, Enum):
    """Outcome of a subcommand."""

    SUCCESS = "Success"
    CONFIG_ERROR = "ConfigError"
    NUMERICAL_GUARD = "NumericalGuard"
    INCONCLUSIVE = "Inconclusive"
    EXCEPTION = "Exception"

    @property
    def exit_code(self) -> ExitCode:
        return {
            CommandStatus.SUCCESS: ExitCode.OK,
            CommandStatus.CONFIG_ERROR: ExitCode.CONFIG_ERROR,
            CommandStatus.NUMERICAL_GUARD: ExitCode.NUMERICAL_GUARD,
            CommandStatus.INCONCLUSIVE: ExitCode.INCONCLUSIVE,
            # Unexpected failures are reported as a tripped guard
            CommandStatus.EXCEPTION: ExitCode.NUMERICAL_GUARD,
        }[self]


class CommandResult(BaseModel):
    """Outcome of one subcommand.

    Attributes:
        status: Outcome status, determines the process exit code.
        message: Human readable summary.
        artifacts: Paths of the files written by the command.
        payload: Small JSON-able summary echoed to stdout.
        exception: Structured record of the exception, if one ended the command.
    """

    model_config = ConfigDict(extra="forbid")

    status: CommandStatus
    message: str
    artifacts: List[str] = Field(default_factory=list)
    payload: Dict[str, Any] = Field(default_factory=dict)
    exception: Optional[ExceptionData] = None

    @property
    def exit_code(self) -> int:
        return int(self.status.exit_code)

    def __str__(self) -> str:
        """Render as JSON for Fire's stdout echo."""
        return json.dumps(self.model_dump(exclude_none=True, mode="json"), indent=2)
