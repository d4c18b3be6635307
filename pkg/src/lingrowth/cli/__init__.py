"""
Command-line experiment runner.

Usage:
    # Growth of site oriented percolation, 20 replicas
    lingrowth run --model site_op --p 0.7 --horizon 200 --replicas 20 --out out/site

    # Path algorithm on a weighted kernel from a config file, flags win
    lingrowth path --config weighted.json --lookahead 40

    # Trichotomy verdict over a delta grid
    lingrowth classify --model bcpp_lse --p 0.6 --q 0.3 --deltas "[0.25, 1.0]"

    # Continuous-time process and its replay check
    lingrowth ct --model ct_bernoulli --p 0.5 --t-end 20

    # Exact masses against brute-force path counts
    lingrowth oracle --model bond_op --p 0.6 --oracle-steps 12 --replicas 50
"""

from typing import Any, Callable, Dict, Optional

from lingrowth.cli.commands import cmd_classify, cmd_ct, cmd_oracle, cmd_path, cmd_run
from lingrowth.cli.config import ExperimentConfig, build_config, load_config_file, preset
from lingrowth.cli.writers import OutputWriter, read_csv
from lingrowth.logging import configure_logging
from lingrowth.models.command_result import CommandResult
from lingrowth.utils.decorators import command_guard


@command_guard()
def execute(
    command: Callable[[ExperimentConfig], CommandResult],
    config_path: Optional[str] = None,
    flags: Optional[Dict[str, Any]] = None,
) -> CommandResult:
    """Build the configuration, then run ``command`` on it."""
    flags = dict(flags or {})
    log_level = flags.pop("log_level", None)
    log_json = flags.pop("log_json", None)
    if log_level or log_json:
        configure_logging(level=log_level, json_path=log_json)
    return command(build_config(config_path, **flags))


class LinGrowthCLI:
    """Simulate lattice linear systems and check their growth bounds."""

    def run(self, config: Optional[str] = None, **flags) -> CommandResult:
        """Trajectory CSV and GrowthReport summary."""
        return execute(cmd_run, config, flags)

    def path(self, config: Optional[str] = None, **flags) -> CommandResult:
        """PathTrace CSV with rule usage and good-event frequency."""
        return execute(cmd_path, config, flags)

    def classify(self, config: Optional[str] = None, **flags) -> CommandResult:
        """Trichotomy verdict JSON."""
        return execute(cmd_classify, config, flags)

    def ct(self, config: Optional[str] = None, **flags) -> CommandResult:
        """Continuous-time trajectory, event log and discretization check."""
        return execute(cmd_ct, config, flags)

    def oracle(self, config: Optional[str] = None, **flags) -> CommandResult:
        """Brute-force path-count cross-check of a binary kernel."""
        return execute(cmd_oracle, config, flags)


__all__ = [
    "ExperimentConfig",
    "LinGrowthCLI",
    "OutputWriter",
    "build_config",
    "cmd_classify",
    "cmd_ct",
    "cmd_oracle",
    "cmd_path",
    "cmd_run",
    "execute",
    "load_config_file",
    "preset",
    "read_csv",
]
