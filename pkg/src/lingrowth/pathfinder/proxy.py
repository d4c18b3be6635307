"""
Lookahead proxy for percolation points.

A space-time point (m, x) passes the proxy if its restart chain is still
alive at min(m + L, horizon).
"""

from typing import Dict, Iterable, Optional, Tuple

from loguru import logger

from lingrowth.config.env import DEFAULTS
from lingrowth.core.lattice import Site
from lingrowth.evolution.restart import SupportChain
from lingrowth.evolution.trajectory import Trajectory

proxy_logger = logger.bind(component="pathfinder")


def default_lookahead(trajectory: Trajectory) -> int:
    return DEFAULTS.LOOKAHEAD_PER_RANGE * trajectory.environment.default_range


class PercProxy:
    """
    Memoized proxy verdicts over one trajectory's environment.

    A sweep from (m, x) stops early once it meets a point already known to
    pass; that point's own deadline is never earlier than m's.
    """

    def __init__(self, trajectory: Trajectory, lookahead: Optional[int] = None):
        self.trajectory = trajectory
        self.lookahead = lookahead if lookahead is not None else default_lookahead(trajectory)
        if self.lookahead < 1:
            msg = f"Lookahead must be positive, got {self.lookahead}"
            proxy_logger.error(msg)
            raise ValueError(msg)
        self.verdicts: Dict[Tuple[int, Site], bool] = {}
        self._passing: Dict[int, set] = {}
        self.truncated_points = 0

    @property
    def truncated(self) -> bool:
        return self.truncated_points > 0

    def deadline(self, m: int) -> int:
        return min(m + self.lookahead, self.trajectory.horizon)

    def verdict(self, m: int, x: Site) -> bool:
        key = (m, x)
        if key in self.verdicts:
            return self.verdicts[key]
        horizon = self.trajectory.horizon
        if m + self.lookahead > horizon:
            if not self.truncated:
                proxy_logger.warning(
                    f"Lookahead {self.lookahead} from time {m} is clipped at horizon {horizon}"
                )
            self.truncated_points += 1

        chain = SupportChain(self.trajectory.environment, m, x, horizon)
        end = self.deadline(m)
        result = True
        for n in range(m + 1, end + 1):
            support = chain.support_at(n)
            if not support:
                result = False
                break
            if not support.isdisjoint(self._passing.get(n, ())):
                break
        self.verdicts[key] = result
        if result:
            self._passing.setdefault(m, set()).add(x)
        return result

    def warm(self, points: Iterable[Tuple[int, Site]]) -> None:
        """Evaluate verdicts latest-first so earlier sweeps can stop early."""
        for m, x in sorted(points, key=lambda point: -point[0]):
            self.verdict(m, x)


def percolation_proxy(trajectory: Trajectory, m: int, x: Site, lookahead: Optional[int] = None) -> bool:
    """True iff the restart chain from (m, x) survives to min(m + L, horizon)."""
    return PercProxy(trajectory, lookahead).verdict(m, x)
