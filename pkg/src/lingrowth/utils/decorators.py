"""
Decorators for the lingrowth command line.

``command_guard`` turns domain exceptions raised inside a subcommand into a
CommandResult whose status selects the process exit code.
"""

import functools
import traceback
from typing import Any, Callable, Dict, Optional, Type, TypeVar, cast

from loguru import logger

from lingrowth.exceptions import ConfigError, NumericalGuardError
from lingrowth.models.command_result import CommandResult, CommandStatus
from lingrowth.models.exception_data import ExceptionData

T = TypeVar("T", bound=Callable[..., Any])

DEFAULT_STATUS_MAP: Dict[Type[BaseException], CommandStatus] = {
    ConfigError: CommandStatus.CONFIG_ERROR,
    NumericalGuardError: CommandStatus.NUMERICAL_GUARD,
}

guard_logger = logger.bind(component="cli")


def command_guard(
    status_map: Optional[Dict[Type[BaseException], CommandStatus]] = None,
    reraise: Optional[list[type]] = None,
    log_level: str = "error",
) -> Callable[[T], T]:
    """
    Decorator to convert exceptions raised by a subcommand into a CommandResult.

    Args:
        status_map: Exception class to status mapping, checked in insertion
                    order with ``isinstance``. Unmapped exceptions get
                    ``CommandStatus.EXCEPTION``.
        reraise: Exception types re-raised instead of handled.
        log_level: The log level used for the exception message.

    Returns:
        The decorated function.
    """
    status_map = status_map or DEFAULT_STATUS_MAP
    reraise = reraise or []

    def decorator(func: T) -> T:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                guard_logger.debug(f"Calling {func.__name__} with kwargs={kwargs}")
                return func(*args, **kwargs)
            except Exception as e:
                if any(isinstance(e, exc_type) for exc_type in reraise):
                    raise

                status = next(
                    (
                        mapped
                        for exc_type, mapped in status_map.items()
                        if isinstance(e, exc_type)
                    ),
                    CommandStatus.EXCEPTION,
                )
                log_func = getattr(guard_logger, log_level)
                log_func(f"{func.__name__} failed with {type(e).__name__}: {e}")
                guard_logger.debug(traceback.format_exc())
                return CommandResult(
                    status=status,
                    message=str(e),
                    exception=ExceptionData.from_exception(e),
                )

        return cast(T, wrapper)

    return decorator
