"""
Finite-horizon checks of the growth lower bounds and of the nongrowth
upper bound. Each check returns a BoundCheck record instead of raising.
"""

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict

from lingrowth.config.env import TOLERANCES
from lingrowth.pathfinder.trace import PathTrace


class BoundCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    statistic: float
    bound: float
    passed: bool
    detail: str = ""


def check_path_bound(
    trace: PathTrace, c_hat: float, delta: float, tolerance: Optional[float] = None
) -> BoundCheck:
    """(1/N) ln M_{N,Gamma(N)} at the horizon N against c_delta ln(1+delta) - tolerance."""
    tolerance = TOLERANCES.RATE if tolerance is None else tolerance
    bound = c_hat * math.log1p(delta) - tolerance
    n = trace.end_time - trace.start_time
    if not trace.percolates or n < 1:
        return BoundCheck(
            name="path", statistic=-math.inf, bound=bound, passed=False, detail="Gamma undefined"
        )
    last = trace.start_time + len(trace.big_gamma) - 1
    if last < trace.end_time:
        return BoundCheck(
            name="path",
            statistic=-math.inf,
            bound=bound,
            passed=False,
            detail=f"Gamma ends at {last} before the horizon {trace.end_time}",
        )
    statistic = trace.big_gamma_log_mass[n] / n
    return BoundCheck(
        name="path",
        statistic=statistic,
        bound=bound,
        passed=statistic >= bound,
        detail=f"n={n}",
    )


def check_rate_bound(
    rate: float, c_hat: float, delta: float, m: int = 1, tolerance: Optional[float] = None
) -> BoundCheck:
    """Fitted rate against (1/m) c_delta(prod B) ln(1+delta) - tolerance."""
    tolerance = TOLERANCES.RATE if tolerance is None else tolerance
    bound = c_hat * math.log1p(delta) / m - tolerance
    return BoundCheck(
        name="rate", statistic=rate, bound=bound, passed=rate >= bound, detail=f"m={m}"
    )


def check_nongrowth(rate: float, tolerance: Optional[float] = None) -> BoundCheck:
    """Fitted rate at most the nongrowth tolerance."""
    tolerance = TOLERANCES.NONGROWTH if tolerance is None else tolerance
    return BoundCheck(name="nongrowth", statistic=rate, bound=tolerance, passed=rate <= tolerance)


def check_good_mass(trace: PathTrace, delta: Optional[float] = None, rel_tol: float = 1e-9) -> BoundCheck:
    """
    ln M_{n,Gamma(n)} >= (#good events before n) ln(1+delta) at every n
    where Gamma is defined. The statistic is the worst margin.
    """
    delta = trace.delta if delta is None else delta
    step = math.log1p(delta)
    worst = math.inf
    for i, log_mass in enumerate(trace.big_gamma_log_mass):
        required = trace.good_before(trace.start_time + i) * step
        worst = min(worst, log_mass - required + rel_tol * max(abs(required), 1.0))
    if worst is math.inf:
        worst = 0.0
    return BoundCheck(name="good_mass", statistic=worst, bound=0.0, passed=worst >= 0)


def check_good_frequency(trace: PathTrace, c_hat: float, tolerance: Optional[float] = None) -> BoundCheck:
    """|good-event frequency - c_delta| within the LLN tolerance."""
    tolerance = TOLERANCES.LLN if tolerance is None else tolerance
    gap = abs(trace.good_frequency() - c_hat)
    return BoundCheck(
        name="good_frequency",
        statistic=trace.good_frequency(),
        bound=c_hat,
        passed=gap <= tolerance,
        detail=f"gap={gap:.4f}",
    )
