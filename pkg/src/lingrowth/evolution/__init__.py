"""Main chain, restart chains and reachability over one shared environment."""

from lingrowth.evolution.environment import Environment
from lingrowth.evolution.restart import RestartHandle, SupportChain, alive, reaches, restart
from lingrowth.evolution.trajectory import Trajectory, run

__all__ = [
    "Environment",
    "RestartHandle",
    "SupportChain",
    "Trajectory",
    "alive",
    "reaches",
    "restart",
    "run",
]
