"""
Growth-rate fitting: least-squares slope of ln|M_n| over the tail window.
"""

import math
from typing import List, Optional, Sequence, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict
from scipy.stats import linregress

from lingrowth.config.env import DEFAULTS, TOLERANCES
from lingrowth.core.mass_field import MassMode
from lingrowth.estimator.replicas import map_replicas, mean, proportion
from lingrowth.estimator.report import Estimate
from lingrowth.evolution.trajectory import Trajectory, run
from lingrowth.exceptions import ExtinctTrajectoryError
from lingrowth.kernels.models import ModelSpec

growth_logger = logger.bind(component="estimator")


def tail_window(horizon: int, tail_fraction: float) -> range:
    if not 0 < tail_fraction <= 1:
        msg = f"Tail fraction must lie in (0, 1], got {tail_fraction}"
        growth_logger.error(msg)
        raise ValueError(msg)
    first = min(int(math.floor(horizon * (1.0 - tail_fraction))), horizon - 1)
    return range(max(first, 0), horizon + 1)


def fit_log_masses(log_masses: Sequence[float], tail_fraction: Optional[float] = None) -> Estimate:
    """Slope (with stderr) of a ln|M_n| series over its tail window."""
    horizon = len(log_masses) - 1
    if horizon < 1:
        msg = "A growth rate needs at least two time steps"
        growth_logger.error(msg)
        raise ValueError(msg)
    if not math.isfinite(log_masses[-1]):
        msg = "Trajectory is extinct at the horizon; no growth rate on extinction"
        growth_logger.error(msg)
        raise ExtinctTrajectoryError(msg)
    window = tail_window(horizon, tail_fraction or DEFAULTS.TAIL_FRACTION)
    n = np.fromiter(window, dtype=float)
    y = np.asarray([log_masses[k] for k in window], dtype=float)
    if len(window) == 2:
        return Estimate(value=float(y[1] - y[0]), stderr=0.0, count=1)
    fit = linregress(n, y)
    return Estimate(value=float(fit.slope), stderr=float(fit.stderr), count=1)


def fit_growth(
    trajectories: Union[Trajectory, Sequence[Trajectory]],
    tail_fraction: Optional[float] = None,
) -> Estimate:
    """
    Growth rate of one trajectory, or the mean over the surviving members of
    a replica set (stderr = spread / sqrt(#survivors)).

    Raises:
        ExtinctTrajectoryError: the trajectory (or every replica) died out
    """
    if isinstance(trajectories, Trajectory):
        return fit_log_masses(trajectories.log_masses(), tail_fraction)
    slopes = [
        fit_log_masses(t.log_masses(), tail_fraction).value
        for t in trajectories
        if not t.fields[-1].is_empty()
    ]
    if not slopes:
        msg = "Every replica is extinct at the horizon"
        growth_logger.error(msg)
        raise ExtinctTrajectoryError(msg)
    return mean(slopes)


class ReplicaGrowth(BaseModel):
    """Per-replica outcome reduced from one trajectory."""

    model_config = ConfigDict(frozen=True)

    seed: int
    survived: bool
    rate: Optional[float] = None
    rate_stderr: Optional[float] = None
    log_final_mass: float
    extinction_time: Optional[int] = None

    @property
    def cesaro_term(self) -> float:
        """log(1 + |M_N|)."""
        return float(np.logaddexp(0.0, self.log_final_mass))


def trajectory_growth(trajectory: Trajectory, tail_fraction: Optional[float] = None) -> ReplicaGrowth:
    """Reduce a trajectory to its growth summary."""
    horizon = trajectory.horizon
    log_masses = trajectory.log_masses()
    survived = not trajectory.fields[-1].is_empty()
    rate = fit_log_masses(log_masses, tail_fraction) if survived and horizon >= 1 else None
    return ReplicaGrowth(
        seed=trajectory.seed,
        survived=survived,
        rate=rate.value if rate else None,
        rate_stderr=rate.stderr if rate else None,
        log_final_mass=log_masses[-1],
        extinction_time=trajectory.extinction_time(),
    )


def replica_growth(
    model: ModelSpec,
    seed: int,
    horizon: int,
    mode: MassMode = MassMode.FLOAT,
    tail_fraction: Optional[float] = None,
) -> ReplicaGrowth:
    """Run one replica and keep only its growth summary."""
    return trajectory_growth(run(model, seed, horizon, mode=mode), tail_fraction)


def growth_replicas(
    model: ModelSpec,
    horizon: int,
    replicas: int,
    seed: int,
    mode: MassMode = MassMode.FLOAT,
    tail_fraction: Optional[float] = None,
    workers: Optional[int] = None,
) -> List[ReplicaGrowth]:
    return map_replicas(
        lambda s: replica_growth(model, s, horizon, mode, tail_fraction), seed, replicas, workers
    )


def aggregate_rate(outcomes: Sequence[ReplicaGrowth]) -> Optional[Estimate]:
    """Mean rate over surviving replicas, None when all died."""
    rates = [o.rate for o in outcomes if o.rate is not None]
    return mean(rates) if rates else None


def cesaro(outcomes: Sequence[ReplicaGrowth], horizon: int) -> float:
    """Empirical E[log(1 + |M_N|)] / N; reported, never used for a decision."""
    if horizon < 1:
        return 0.0
    return math.fsum(o.cesaro_term for o in outcomes) / (len(outcomes) * horizon)


def survival_growth_agreement(
    outcomes: Sequence[ReplicaGrowth], threshold: Optional[float] = None
) -> Estimate:
    """
    Fraction of replicas where "survives to the horizon" and "fitted rate
    above ``threshold``" disagree.
    """
    threshold = TOLERANCES.NONGROWTH if threshold is None else threshold
    disagreements = [
        o.survived != (o.rate is not None and o.rate > threshold) for o in outcomes
    ]
    estimate = proportion(disagreements)
    growth_logger.info(f"Survival/growth disagreement: {estimate}")
    return estimate
