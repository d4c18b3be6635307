"""
Main entry point of the ``lingrowth`` command.

Usage:
    lingrowth run --model site_op --p 0.6 --horizon 100
    python -m lingrowth classify --config experiment.json

The process exits with the code of the CommandResult: 0 ok, 1 config error,
2 numerical guard tripped, 3 inconclusive classification.
"""

import contextlib
import sys
import traceback
from typing import Optional, Sequence

import fire

from lingrowth.cli import LinGrowthCLI
from lingrowth.config.constants import ExitCode
from lingrowth.logging import logger
from lingrowth.models.command_result import CommandResult


@contextlib.contextmanager
def log_exceptions(operation_name="operation"):
    try:
        yield
    except Exception as e:
        logger.error(f"Error during {operation_name}: {e}")
        logger.error(traceback.format_exc())
        raise


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Dispatch the subcommand with Fire and exit with its code."""
    with log_exceptions("lingrowth"):
        result = fire.Fire(LinGrowthCLI, command=list(argv) if argv is not None else None, name="lingrowth")
    sys.exit(result.exit_code if isinstance(result, CommandResult) else int(ExitCode.OK))


if __name__ == "__main__":  # pragma: no cover
    main()
