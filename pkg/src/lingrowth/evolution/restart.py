"""
Restart chains M^{(m,x)} over a parent trajectory's environment, and the
reachability relation (m, x) ~> (n, y).
"""

from typing import List, Optional, Protocol, Tuple, Union

from loguru import logger

from lingrowth.core.lattice import Site
from lingrowth.core.mass_field import MassField, MassMode, apply_kernel
from lingrowth.evolution.environment import Environment
from lingrowth.evolution.trajectory import Trajectory
from lingrowth.kernels.conditions import is_binary

restart_logger = logger.bind(component="evolution")

SpaceTime = Tuple[int, Site]


class Chain(Protocol):
    @property
    def start(self) -> int: ...

    def support_at(self, n: int) -> frozenset: ...


def _check_time(m: int, n: int, horizon: int) -> None:
    if not m <= n <= horizon:
        msg = f"Time {n} outside of [{m}, {horizon}]"
        restart_logger.error(msg)
        raise ValueError(msg)


class RestartHandle:
    """
    The process started from unit mass at (m, x), driven by the parent's slices.

    Fields are computed on demand and memoized; ``fields`` materializes the
    whole chain up to the horizon.
    """

    def __init__(self, trajectory: Trajectory, m: int, x: Site, mode: Optional[MassMode] = None):
        _check_time(0, m, trajectory.horizon)
        self.trajectory = trajectory
        self.origin: SpaceTime = (m, x)
        self._fields: List[MassField] = [MassField.delta(x, m, mode or trajectory.mode)]

    @property
    def start(self) -> int:
        return self.origin[0]

    @property
    def horizon(self) -> int:
        return self.trajectory.horizon

    def field_at(self, n: int) -> MassField:
        _check_time(self.start, n, self.horizon)
        environment = self.trajectory.environment
        while self.start + len(self._fields) - 1 < n:
            current = self._fields[-1]
            self._fields.append(
                apply_kernel(current, environment.slice(current.time_index + 1, current.support))
            )
        return self._fields[n - self.start]

    def support_at(self, n: int) -> frozenset:
        return self.field_at(n).support

    @property
    def fields(self) -> List[MassField]:
        self.field_at(self.horizon)
        return list(self._fields)


class SupportChain:
    """
    Boolean reachability sweep from (m, x): the support of M^{(m,x)} without
    the masses. Extinction is absorbing, so the sweep stops there.
    """

    def __init__(self, environment: Environment, m: int, x: Site, horizon: int):
        _check_time(0, m, horizon)
        self.environment = environment
        self.origin: SpaceTime = (m, x)
        self.horizon = horizon
        self._supports: List[frozenset] = [frozenset((x,))]

    @property
    def start(self) -> int:
        return self.origin[0]

    @property
    def reached(self) -> int:
        """Last time the sweep has been advanced to."""
        return self.start + len(self._supports) - 1

    def support_at(self, n: int) -> frozenset:
        _check_time(self.start, n, self.horizon)
        while self.reached < n:
            current = self._supports[-1]
            if not current:
                return current
            self._supports.append(self.environment.successors(self.reached + 1, current))
        return self._supports[n - self.start]

    def alive_until(self, n: int) -> bool:
        return bool(self.support_at(n))


def restart(trajectory: Trajectory, m: int, x: Site, mode: Optional[MassMode] = None) -> RestartHandle:
    """M^{(m,x)} over the slices of ``trajectory``."""
    return RestartHandle(trajectory, m, x, mode)


def reaches(trajectory: Trajectory, source: SpaceTime, target: SpaceTime) -> bool:
    """
    True iff an open path leads from ``source`` to ``target``.

    Nonzero entries are >= 1, so positivity of the restart mass at the
    target is equivalent to the existence of an open path.
    """
    (m, x), (n, y) = source, target
    _check_time(m, n, trajectory.horizon)
    if m == n:
        return x == y
    if trajectory.model is not None and is_binary(trajectory.model):
        return y in restart(trajectory, m, x, MassMode.EXACT).support_at(n)
    return y in SupportChain(trajectory.environment, m, x, trajectory.horizon).support_at(n)


def alive(chain: Union[Trajectory, RestartHandle, SupportChain, Chain], upto: int) -> bool:
    """True iff the chain's mass is nonzero at every step up to ``upto``."""
    if upto < chain.start:
        return True
    return bool(chain.support_at(upto))
