import traceback
from typing import List, Optional

from pydantic import BaseModel

from lingrowth.exceptions import ConfigError, LinGrowthError, NumericalGuardError


class TracebackEntry(BaseModel):
    file_path: str
    lineno: int
    name: str


class ExceptionData(BaseModel):
    """Failure record embedded in a CommandResult."""

    traceback: List[TracebackEntry]
    error_type: str
    error: str
    # False for errors that escaped from outside the lingrowth hierarchy
    domain: bool = False
    numerical_guard: bool = False
    config_line: Optional[int] = None
    config_column: Optional[int] = None

    @classmethod
    def from_exception(cls, exc: BaseException) -> "ExceptionData":
        frames = traceback.extract_tb(exc.__traceback__)
        return cls(
            traceback=[
                TracebackEntry(file_path=frame.filename, lineno=frame.lineno, name=frame.name)
                for frame in frames
            ],
            error_type=type(exc).__name__,
            error=str(exc),
            domain=isinstance(exc, LinGrowthError),
            numerical_guard=isinstance(exc, NumericalGuardError),
            config_line=exc.line if isinstance(exc, ConfigError) else None,
            config_column=exc.column if isinstance(exc, ConfigError) else None,
        )

    @property
    def origin(self) -> Optional[TracebackEntry]:
        """Innermost frame, where the error was raised."""
        return self.traceback[-1] if self.traceback else None
