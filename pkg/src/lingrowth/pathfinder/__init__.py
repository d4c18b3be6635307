"""The path algorithm: gamma, the percolation proxy, Gamma and good events."""

from typing import Optional

from loguru import logger

from lingrowth.evolution.trajectory import Trajectory
from lingrowth.exceptions import NoPercolationStartError
from lingrowth.kernels.models import HeavySiteInfo
from lingrowth.pathfinder.big_gamma import build_big_gamma
from lingrowth.pathfinder.gamma import build_gamma, build_gamma_from, preferred_direction
from lingrowth.pathfinder.good import good_events
from lingrowth.pathfinder.proxy import PercProxy, default_lookahead, percolation_proxy
from lingrowth.pathfinder.trace import PathTrace, Rule

pathfinder_logger = logger.bind(component="pathfinder")


def trace_path(
    trajectory: Trajectory, heavy: HeavySiteInfo, lookahead: Optional[int] = None
) -> PathTrace:
    """gamma, Gamma (when the origin passes the proxy) and good events of one trajectory."""
    proxy = PercProxy(trajectory, lookahead)
    trace = build_gamma(trajectory, heavy)
    try:
        trace = build_big_gamma(trace, trajectory, proxy)
    except NoPercolationStartError:
        trace = trace.model_copy(
            update={"lookahead": proxy.lookahead, "percolates": False, "truncated": proxy.truncated}
        )
    good = good_events(trace, trajectory, heavy, proxy)
    pathfinder_logger.debug(
        f"Traced seed={trajectory.seed}: percolates={trace.percolates} "
        f"good frequency={sum(good) / max(len(good), 1):.4f}"
    )
    return trace.model_copy(update={"good": good, "truncated": trace.truncated or proxy.truncated})


__all__ = [
    "PathTrace",
    "PercProxy",
    "Rule",
    "build_big_gamma",
    "build_gamma",
    "build_gamma_from",
    "default_lookahead",
    "good_events",
    "percolation_proxy",
    "preferred_direction",
    "trace_path",
]
