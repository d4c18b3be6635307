from typing import List

from lingrowth.core.lattice import add
from lingrowth.evolution.trajectory import Trajectory
from lingrowth.kernels.models import HeavySiteInfo
from lingrowth.pathfinder.proxy import PercProxy
from lingrowth.pathfinder.trace import PathTrace


def good_events(
    trace: PathTrace, trajectory: Trajectory, heavy: HeavySiteInfo, proxy: PercProxy
) -> List[bool]:
    """
    G_n: the heavy entry at (n+1, gamma(n), gamma(n) + x) reaches 1 + delta
    and (n+1, gamma(n+1)) passes the proxy.
    """
    environment = trajectory.environment
    threshold = 1.0 + heavy.delta
    x_star = tuple(heavy.site)
    good = []
    for i, here in enumerate(trace.gamma[:-1]):
        n = trace.start_time + i
        heavy_entry = environment.entry(n + 1, here, add(here, x_star)) >= threshold
        good.append(heavy_entry and proxy.verdict(n + 1, trace.gamma[i + 1]))
    return good
