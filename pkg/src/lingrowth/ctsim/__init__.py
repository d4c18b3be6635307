"""Continuous-time processes Y and Z and their unit-time discretization."""

from lingrowth.ctsim.classify import CtClassification, ct_classify
from lingrowth.ctsim.clocks import ClockBank, clock_gaps, draw_jumps
from lingrowth.ctsim.discretize import (
    ReplayCheck,
    ct_discrete_chain,
    ct_discretize,
    ct_environment,
    replay_check,
)
from lingrowth.ctsim.kernel import CtComponent, CtKernel
from lingrowth.ctsim.simulate import CtEvent, CtRun, CtState, ct_run_y, ct_run_z

__all__ = [
    "ClockBank",
    "CtClassification",
    "CtComponent",
    "CtEvent",
    "CtKernel",
    "CtRun",
    "CtState",
    "ReplayCheck",
    "clock_gaps",
    "ct_classify",
    "ct_discrete_chain",
    "ct_discretize",
    "ct_environment",
    "draw_jumps",
    "replay_check",
]
