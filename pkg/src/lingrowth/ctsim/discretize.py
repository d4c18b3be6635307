"""
Unit-time discretization: B_{n+1,x,y} = Y^{(n,x)}_{n+1,y}, the population at
(n+1, y) of the process started from one particle at (n, x), over the
shared clocks and K draws.
"""

from typing import Dict, Iterable, List, Optional

from loguru import logger
from pydantic import BaseModel

from lingrowth.config.constants import SCHEMA_VERSION
from lingrowth.core.kernel_slice import KernelSlice, Row
from lingrowth.core.lattice import SITE_ORDER, Site, linf, sub
from lingrowth.core.mass_field import MassField, MassMode, apply_kernel
from lingrowth.ctsim.clocks import ClockBank
from lingrowth.ctsim.kernel import CtKernel
from lingrowth.ctsim.simulate import CtRun, ct_run_y
from lingrowth.evolution.environment import Environment
from lingrowth.evolution.trajectory import Trajectory
from lingrowth.exceptions import WindowTooSmallError

discretize_logger = logger.bind(component="ctsim")


def ct_discretize(
    kernel: CtKernel,
    seed: int,
    n: int,
    window: Iterable[Site],
    clocks: Optional[ClockBank] = None,
    max_range: Optional[int] = None,
) -> KernelSlice:
    """
    Slice B_{n+1} on ``window``.

    Rows run one after another over the same clocks. The slice is validated,
    so every positive entry is checked to be >= 1. Its range is the largest
    displacement seen over the unit interval, plus one.

    Raises:
        WindowTooSmallError: some row reaches beyond ``max_range`` of its source
    """
    clocks = clocks or ClockBank(seed)
    rows: Dict[Site, Row] = {}
    displacement = 0
    for x in SITE_ORDER.sorted(window):
        run = ct_run_y(
            kernel, MassField.delta(x, n), float(n + 1), seed, t_start=float(n), clocks=clocks
        )
        rows[x] = dict(run.final.field.entries)
        reach = max((linf(sub(y, x)) for y in rows[x]), default=0)
        if max_range is not None and reach > max_range:
            msg = f"Row {x} of slice {n + 1} reaches distance {reach}, beyond the range bound {max_range}"
            discretize_logger.error(msg)
            raise WindowTooSmallError(msg)
        displacement = max(displacement, reach)
    return KernelSlice(step=n + 1, window=frozenset(rows), rows=rows, range=displacement + 1)


def ct_environment(kernel: CtKernel, seed: int, max_range: Optional[int] = None) -> Environment:
    """Environment whose slices are discretized from the continuous-time process."""
    clocks = ClockBank(seed)
    return Environment(
        None,
        seed,
        source=lambda step, window: ct_discretize(kernel, seed, step - 1, window, clocks, max_range),
    )


def ct_discrete_chain(
    kernel: CtKernel, seed: int, y0: MassField, horizon: int, max_range: Optional[int] = None
) -> Trajectory:
    """The discrete chain M_{n+1} = M_n B_{n+1} over discretized slices, from Y_0 = y0."""
    environment = ct_environment(kernel, seed, max_range)
    fields = [y0]
    for n in range(1, horizon + 1):
        current = fields[-1]
        fields.append(apply_kernel(current, environment.slice(n, current.support)))
    return Trajectory(None, seed, horizon, fields, environment)


class ReplayCheck(BaseModel):
    """Comparison of Y at integer times with the discretized chain."""

    schema_version: str = SCHEMA_VERSION
    horizon: int
    seed: int
    exact: bool
    bit_exact_expected: bool
    max_abs_difference: float
    mismatched_times: List[int]
    slices_checked: int

    @property
    def passed(self) -> bool:
        return not self.mismatched_times


def replay_check(kernel: CtKernel, seed: int, y0: MassField, horizon: int) -> ReplayCheck:
    """
    Run Y and the discretized chain from the same y0 and seed and compare
    them at t = 0..horizon. Equality is bit-exact for integer-valued K.
    """
    run: CtRun = ct_run_y(kernel, y0, float(horizon), seed, mode=y0.mode)
    chain = ct_discrete_chain(kernel, seed, y0, horizon)
    mismatched = []
    worst = 0.0
    for n, (snapshot, field_) in enumerate(zip(run.snapshots, chain.fields)):
        sites = snapshot.support | field_.support
        gap = max((abs(float(snapshot.get(x)) - float(field_.get(x))) for x in sites), default=0.0)
        worst = max(worst, gap)
        if snapshot.entries != field_.entries:
            mismatched.append(n)
    integer = kernel.is_integer_valued()
    check = ReplayCheck(
        horizon=horizon,
        seed=seed,
        exact=y0.mode is MassMode.EXACT,
        bit_exact_expected=integer or y0.mode is MassMode.EXACT,
        max_abs_difference=worst,
        mismatched_times=mismatched,
        slices_checked=horizon,
    )
    log = discretize_logger.info if check.passed else discretize_logger.warning
    log(f"Replay check over {horizon} steps: mismatches at {mismatched}, max gap {worst:g}")
    return check
