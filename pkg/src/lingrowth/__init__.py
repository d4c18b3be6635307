"""Simulation and verification of exponential growth for lattice linear systems."""

from lingrowth import logging  # noqa: F401  (installs the log sinks)

__version__ = "0.1.0"
