"""
The chain M_n = M_{n-1} B_n started from delta_o (or a configured start).
"""

import math
from dataclasses import dataclass
from typing import Iterator, List, Optional

from loguru import logger

from lingrowth.core.lattice import origin
from lingrowth.core.mass_field import MassField, MassMode, apply_kernel, log_total_mass, total_mass
from lingrowth.evolution.environment import Environment
from lingrowth.kernels.models import ModelSpec

trajectory_logger = logger.bind(component="evolution")


@dataclass
class Trajectory:
    model: Optional[ModelSpec]
    seed: int
    horizon: int
    fields: List[MassField]
    environment: Environment

    @property
    def start(self) -> int:
        return 0

    @property
    def dimension(self) -> int:
        return self.model.dimension if self.model is not None else self.fields[0].dimension

    @property
    def mode(self) -> MassMode:
        return self.fields[0].mode

    def field_at(self, n: int) -> MassField:
        return self.fields[n]

    def support_at(self, n: int) -> frozenset:
        return self.fields[n].support

    def total_masses(self) -> List[float]:
        return [float(total_mass(f)) for f in self.fields]

    def log_masses(self) -> List[float]:
        return [log_total_mass(f) for f in self.fields]

    def extinction_time(self) -> Optional[int]:
        """First n with M_n = 0, None if the chain survives to the horizon."""
        for n, field_ in enumerate(self.fields):
            if field_.is_empty():
                return n
        return None

    def snapshot_rows(self) -> Iterator[dict]:
        """One row per step: n, total_mass, support_size, log_mass."""
        for field_ in self.fields:
            log_mass = log_total_mass(field_)
            yield {
                "n": field_.time_index,
                "total_mass": total_mass(field_),
                "support_size": len(field_.entries),
                "log_mass": log_mass if math.isfinite(log_mass) else "-inf",
            }


def run(
    model: ModelSpec,
    seed: int,
    horizon: int,
    start: Optional[MassField] = None,
    mode: MassMode = MassMode.FLOAT,
    environment: Optional[Environment] = None,
) -> Trajectory:
    """
    Run M_0, ..., M_horizon.

    Args:
        model: Kernel law
        seed: Replica seed
        horizon: N >= 0
        start: M_0, defaults to unit mass at the origin
        mode: Mass representation, ignored when ``start`` is given
        environment: Shared environment, built from (model, seed) when omitted

    Raises:
        MassOverflowError: a float mass passed the ceiling; rerun in log mode
    """
    if horizon < 0:
        msg = f"Horizon must be nonnegative, got {horizon}"
        trajectory_logger.error(msg)
        raise ValueError(msg)
    environment = environment or Environment(model, seed)
    current = start or MassField.delta(origin(model.dimension), 0, mode)
    fields = [current]
    for n in range(1, horizon + 1):
        current = apply_kernel(current, environment.slice(n, current.support))
        fields.append(current)
    trajectory = Trajectory(model, seed, horizon, fields, environment)
    trajectory_logger.debug(
        f"Ran {model.label()} seed={seed} to N={horizon}: "
        f"|support|={len(current.entries)} log|M_N|={log_total_mass(current):.4f}"
    )
    return trajectory
