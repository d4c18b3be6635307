"""
Counter-keyed Poisson clocks and K draws.

The i-th inter-event time of site z and the i-th K drawn at z are pure
functions of (seed, z, i), so adding silent sites or restarting a run from
an intermediate time never perturbs existing clocks.
"""

from bisect import bisect_right
from typing import Dict, List, Tuple

import numpy as np

from lingrowth.core.lattice import Site
from lingrowth.ctsim.kernel import CtKernel
from lingrowth.kernels.streams import Purpose, uniforms

CHUNK = 32


def _keys(site: Site, first: int, count: int) -> np.ndarray:
    return np.array([(*site, i) for i in range(first, first + count)], dtype=np.int64)


def clock_gaps(seed: int, site: Site, first: int, count: int) -> np.ndarray:
    """Inter-event times first..first+count-1 of ``site``: i.i.d. mean-one exponentials."""
    u = uniforms(seed, Purpose.CT_CLOCK, 0, _keys(site, first, count), 1)[:, 0]
    return -np.log1p(-u)


class ClockBank:
    """Absolute event times per site, extended in fixed chunks and memoized."""

    def __init__(self, seed: int):
        self.seed = seed
        self._times: Dict[Site, List[float]] = {}

    def _extend(self, site: Site, t: float) -> List[float]:
        times = self._times.setdefault(site, [])
        while not times or times[-1] <= t:
            last = times[-1] if times else 0.0
            gaps = clock_gaps(self.seed, site, len(times), CHUNK)
            times.extend((last + np.cumsum(gaps)).tolist())
        return times

    def next_event(self, site: Site, after: float) -> Tuple[float, int]:
        """(time, index) of the first event of ``site`` strictly after ``after``."""
        times = self._extend(site, after)
        index = bisect_right(times, after)
        return times[index], index

    def events_between(self, site: Site, start: float, end: float) -> int:
        times = self._extend(site, end)
        return bisect_right(times, end) - bisect_right(times, start)


def draw_jumps(kernel: CtKernel, seed: int, site: Site, index: int) -> Dict[Site, float]:
    """The K drawn at the ``index``-th event of ``site``; zero components are omitted."""
    components = kernel.components
    u = uniforms(seed, Purpose.CT_JUMP, 0, _keys(site, index, 1), len(components))[0]
    jumps: Dict[Site, float] = {}
    for component, draw in zip(components, u):
        cumulative = 0.0
        value = component.values[-1][1]
        for prob, candidate in component.values:
            cumulative += prob
            if draw < cumulative:
                value = candidate
                break
        if value:
            jumps[component.offset] = value
    return jumps
