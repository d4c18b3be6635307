from lingrowth.models.command_result import CommandResult, CommandStatus
from lingrowth.models.exception_data import ExceptionData, TracebackEntry

__all__ = [
    "CommandResult",
    "CommandStatus",
    "ExceptionData",
    "TracebackEntry",
]
