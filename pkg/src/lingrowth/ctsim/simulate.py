"""
Event-driven simulation of Y_t and of its dual Z_t.

Only sites whose clock can change the field are scheduled: the support for
Y, the support dilated by r_K - 1 for Z. Events elsewhere are no-ops, so
skipping them leaves the trajectory unchanged; ``padding`` widens the
scheduled region to check exactly that.
"""

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from lingrowth.config.env import TOLERANCES
from lingrowth.core.lattice import Site, add, box_offsets, dilate, origin
from lingrowth.core.mass_field import MassField, MassMode, exact_value, log_total_mass, total_mass
from lingrowth.ctsim.clocks import ClockBank, draw_jumps
from lingrowth.ctsim.kernel import CtKernel
from lingrowth.exceptions import MassOverflowError

ct_logger = logger.bind(component="ctsim")

Mass = Union[float, int, Fraction]


class CtEvent(BaseModel):
    model_config = ConfigDict(frozen=True)

    t: float
    site: Tuple[int, ...]
    index: int
    k_sum: float
    k_nonzero: int
    noop: bool = False


@dataclass(frozen=True)
class CtState:
    t: float
    field: MassField
    event_log: Tuple[CtEvent, ...] = ()


@dataclass(frozen=True)
class CtRun:
    process: str
    seed: int
    t_start: float
    t_end: float
    snapshots: List[MassField]
    final: CtState
    padding: int = field(default=0, compare=False)

    @property
    def events(self) -> Tuple[CtEvent, ...]:
        return self.final.event_log

    def applied_events(self) -> List[CtEvent]:
        return [event for event in self.events if not event.noop]

    def log_masses(self) -> List[float]:
        return [log_total_mass(f) for f in self.snapshots]

    def snapshot_rows(self) -> Iterator[dict]:
        for field_ in self.snapshots:
            log_mass = log_total_mass(field_)
            yield {
                "n": field_.time_index,
                "total_mass": total_mass(field_),
                "support_size": len(field_.entries),
                "log_mass": log_mass if math.isfinite(log_mass) else "-inf",
            }

    def event_rows(self) -> Iterator[dict]:
        for event in self.events:
            yield {
                "t": repr(event.t),
                "site": " ".join(str(c) for c in event.site),
                "index": event.index,
                "k_sum": event.k_sum,
                "k_nonzero": event.k_nonzero,
                "noop": int(event.noop),
            }


class _Arithmetic:
    """Scaling and accumulation of masses in one MassMode."""

    def __init__(self, mode: MassMode):
        self.mode = mode

    def scale(self, mass: Mass, k: float) -> Mass:
        if self.mode is MassMode.LOG:
            return mass + math.log(k)
        if self.mode is MassMode.EXACT:
            return mass * exact_value(k)
        return mass * k

    def add(self, a: Optional[Mass], b: Mass) -> Mass:
        if a is None:
            return b
        if self.mode is MassMode.LOG:
            return float(np.logaddexp(a, b))
        return a + b

    def guard(self, mass: Mass, t: float) -> None:
        if self.mode is MassMode.FLOAT and not mass <= TOLERANCES.FLOAT_CEILING:
            msg = (
                f"Mass {mass} exceeds the float ceiling {TOLERANCES.FLOAT_CEILING:g} at t={t:.6f}; "
                "rerun with the log-masses option (--log-mass)"
            )
            ct_logger.error(msg)
            raise MassOverflowError(msg)


def _simulate(
    kernel: CtKernel,
    start: MassField,
    t_start: float,
    t_end: float,
    seed: int,
    dual: bool,
    clocks: Optional[ClockBank] = None,
    padding: int = 0,
) -> CtRun:
    if t_end <= t_start:
        msg = f"t_end {t_end} must exceed the start time {t_start}"
        ct_logger.error(msg)
        raise ValueError(msg)
    clocks = clocks or ClockBank(seed)
    arithmetic = _Arithmetic(start.mode)
    values: Dict[Site, Mass] = dict(start.entries)
    dimension = start.dimension or kernel.dimension
    here = origin(dimension)
    radius = padding + (kernel.range - 1 if dual else 0)
    reach = list(box_offsets(dimension, radius)) if radius else [here]

    def active(z: Site) -> bool:
        return any(add(z, e) in values for e in reach)

    heap: List[Tuple[float, Site, int]] = []
    scheduled: Dict[Site, Tuple[float, int]] = {}

    def schedule(z: Site, after: float) -> None:
        if z in scheduled:
            return
        time, index = clocks.next_event(z, after)
        scheduled[z] = (time, index)
        heapq.heappush(heap, (time, z, index))

    for z in sorted(dilate(values, radius)):
        schedule(z, t_start)

    first_snapshot = int(math.ceil(t_start))
    snapshots: List[MassField] = []
    next_snapshot = first_snapshot
    events: List[CtEvent] = []

    while heap and heap[0][0] <= t_end:
        time, z, index = heapq.heappop(heap)
        del scheduled[z]
        while next_snapshot <= time:
            snapshots.append(MassField(dict(values), next_snapshot, start.mode, dimension))
            next_snapshot += 1
        if not active(z):
            continue

        jumps = draw_jumps(kernel, seed, z, index)
        changed: Dict[Site, Optional[Mass]] = {}
        if dual:
            new: Optional[Mass] = None
            for e, k in jumps.items():
                source = values.get(add(z, e))
                if source is not None:
                    new = arithmetic.add(new, arithmetic.scale(source, k))
            if new != values.get(z):
                changed[z] = new
        elif z in values:
            mass = values[z]
            self_factor = jumps.get(here)
            kept = arithmetic.scale(mass, self_factor) if self_factor else None
            if kept != mass:
                changed[z] = kept
            for e, k in jumps.items():
                if e == here:
                    continue
                target = add(z, e)
                changed[target] = arithmetic.add(values.get(target), arithmetic.scale(mass, k))

        for site, value in changed.items():
            if value is None:
                values.pop(site, None)
            else:
                arithmetic.guard(value, time)
                values[site] = value
        events.append(
            CtEvent(
                t=time,
                site=z,
                index=index,
                k_sum=float(sum(jumps.values())),
                k_nonzero=len(jumps),
                noop=not changed,
            )
        )
        schedule(z, time)
        for site, value in changed.items():
            if value is not None:
                for w in dilate((site,), radius):
                    schedule(w, time)

    while next_snapshot <= t_end:
        snapshots.append(MassField(dict(values), next_snapshot, start.mode, dimension))
        next_snapshot += 1
    final = CtState(
        t=t_end,
        field=MassField(values, int(math.floor(t_end)), start.mode, dimension),
        event_log=tuple(events),
    )
    ct_logger.debug(
        f"{'Z' if dual else 'Y'} run seed={seed} over [{t_start}, {t_end}]: "
        f"{len(events)} events, |support|={len(values)}"
    )
    return CtRun(
        process="Z" if dual else "Y",
        seed=seed,
        t_start=t_start,
        t_end=t_end,
        snapshots=snapshots,
        final=final,
        padding=padding,
    )


def _as_field(initial: Union[MassField, Dict[Site, Mass]], t_start: float, mode: MassMode) -> MassField:
    if isinstance(initial, MassField):
        return initial
    return MassField(dict(initial), int(math.floor(t_start)), mode)


def ct_run_y(
    kernel: CtKernel,
    y0: Union[MassField, Dict[Site, Mass]],
    t_end: float,
    seed: int,
    t_start: float = 0.0,
    mode: MassMode = MassMode.FLOAT,
    clocks: Optional[ClockBank] = None,
    padding: int = 0,
) -> CtRun:
    """
    Simulate Y over [t_start, t_end].

    At the i-th event of site z a fresh K is drawn; Y_z becomes K_0 Y_z and
    every other x gains K_{x-z} Y_z.

    Raises:
        MassOverflowError: a float mass passed the ceiling
    """
    start = _as_field(y0, t_start, mode)
    return _simulate(kernel, start, t_start, t_end, seed, dual=False, clocks=clocks, padding=padding)


def ct_run_z(
    kernel: CtKernel,
    z0: Union[MassField, Dict[Site, Mass]],
    t_end: float,
    seed: int,
    t_start: float = 0.0,
    mode: MassMode = MassMode.FLOAT,
    clocks: Optional[ClockBank] = None,
    padding: int = 0,
) -> CtRun:
    """
    Simulate the dual Z over [t_start, t_end]: at an event of z,
    Z_z becomes sum_y K_{y-z} Z_y and every other site is unchanged.
    """
    start = _as_field(z0, t_start, mode)
    return _simulate(kernel, start, t_start, t_end, seed, dual=True, clocks=clocks, padding=padding)
