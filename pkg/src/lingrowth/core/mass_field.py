"""
Sparse nonnegative mass fields and the one-step evolution M' = M B.

A field stores positive masses only. In the default float mode masses are
floats; the exact mode keeps ints (Fractions for non-integral kernel
entries); the log mode stores natural logarithms, so "nonzero implies >= 1"
reads "log-mass >= 0".
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Union

import numpy as np
from loguru import logger
from scipy.special import logsumexp

from lingrowth.config.env import TOLERANCES
from lingrowth.core.kernel_slice import KernelSlice
from lingrowth.core.lattice import Site
from lingrowth.exceptions import MassOverflowError, WindowTooSmallError

Mass = Union[float, int, Fraction]

field_logger = logger.bind(component="core")


class MassMode(str, Enum):
    FLOAT = "float"
    EXACT = "exact"
    LOG = "log"


def exact_value(value: float) -> Union[int, Fraction]:
    """Exact rational of a float kernel entry, int when integral."""
    if isinstance(value, (int, Fraction)):
        return value
    if float(value).is_integer():
        return int(value)
    return Fraction(value)


@dataclass(frozen=True)
class MassField:
    entries: Dict[Site, Mass]
    time_index: int = 0
    mode: MassMode = MassMode.FLOAT
    dimension: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.time_index < 0:
            raise ValueError(f"time_index must be nonnegative, got {self.time_index}")
        floor = 0.0 if self.mode is MassMode.LOG else 1
        low = [x for x, value in self.entries.items() if not value >= floor]
        if low:
            msg = f"Stored masses must be >= 1 (log-mass >= 0); {len(low)} sites below, first {low[0]}"
            field_logger.error(msg)
            raise ValueError(msg)
        if not self.dimension and self.entries:
            object.__setattr__(self, "dimension", len(next(iter(self.entries))))

    @classmethod
    def delta(
        cls, site: Site, time_index: int = 0, mode: MassMode = MassMode.FLOAT
    ) -> "MassField":
        unit = {MassMode.FLOAT: 1.0, MassMode.EXACT: 1, MassMode.LOG: 0.0}[mode]
        return cls({site: unit}, time_index, mode, len(site))

    @classmethod
    def empty(cls, time_index: int, mode: MassMode = MassMode.FLOAT, dimension: int = 0):
        return cls({}, time_index, mode, dimension)

    @property
    def support(self) -> frozenset:
        return frozenset(self.entries)

    def is_empty(self) -> bool:
        return not self.entries

    def get(self, site: Site) -> Mass:
        """Mass at a site, 0 (or -inf in log mode) when absent."""
        if site in self.entries:
            return self.entries[site]
        return -math.inf if self.mode is MassMode.LOG else 0

    def log_mass_at(self, site: Site) -> float:
        value = self.get(site)
        if self.mode is MassMode.LOG:
            return float(value)
        return math.log(value) if value > 0 else -math.inf

    def to_json(self) -> dict:
        def encode(value):
            if isinstance(value, Fraction):
                return str(value)
            return value

        return {
            "n": self.time_index,
            "mode": self.mode.value,
            "entries": [[list(x), encode(v)] for x, v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "MassField":
        mode = MassMode(payload.get("mode", MassMode.FLOAT.value))

        def decode(value):
            if isinstance(value, str):
                return Fraction(value)
            return value

        entries = {tuple(x): decode(v) for x, v in payload["entries"]}
        return cls(entries, payload["n"], mode)


def total_mass(field_: MassField) -> Mass:
    """|M| = sum of all masses; 0 for the empty field.

    In log mode the (possibly infinite) float total is returned; use
    ``log_total_mass`` to stay in log space.
    """
    if not field_.entries:
        return 0
    if field_.mode is MassMode.EXACT:
        return sum(field_.entries.values())
    if field_.mode is MassMode.LOG:
        log_value = log_total_mass(field_)
        return math.exp(log_value) if log_value < 709 else math.inf
    return math.fsum(field_.entries.values())


def log_total_mass(field_: MassField) -> float:
    """ln |M|, -inf for the empty field."""
    if not field_.entries:
        return -math.inf
    if field_.mode is MassMode.LOG:
        return float(logsumexp(np.fromiter(field_.entries.values(), dtype=float)))
    return math.log(total_mass(field_))


def apply_kernel(field_: MassField, kernel: KernelSlice) -> MassField:
    """One evolution step: M'_x = sum_y M_y B(y, x)."""
    if kernel.step != field_.time_index + 1:
        msg = f"Slice step {kernel.step} does not follow field time {field_.time_index}"
        field_logger.error(msg)
        raise ValueError(msg)
    if not field_.entries.keys() <= kernel.window:
        missing = len(field_.entries.keys() - kernel.window)
        msg = f"Kernel slice {kernel.step} misses {missing} sites of the mass support"
        field_logger.error(msg)
        raise WindowTooSmallError(msg)

    mode = field_.mode
    if mode is MassMode.LOG:
        terms: Dict[Site, list] = {}
        for y, log_m in field_.entries.items():
            for x, b in kernel.rows[y].items():
                terms.setdefault(x, []).append(log_m + math.log(b))
        entries: Dict[Site, Mass] = {
            x: float(np.logaddexp.reduce(values)) if len(values) > 1 else values[0]
            for x, values in terms.items()
        }
    elif mode is MassMode.EXACT:
        entries = {}
        for y, m in field_.entries.items():
            for x, b in kernel.rows[y].items():
                entries[x] = entries.get(x, 0) + m * exact_value(b)
    else:
        entries = {}
        for y, m in field_.entries.items():
            for x, b in kernel.rows[y].items():
                entries[x] = entries.get(x, 0.0) + m * b
        _guard_overflow(entries, kernel.step)

    return MassField(entries, field_.time_index + 1, mode, field_.dimension)


def _guard_overflow(entries: Mapping[Site, float], step: int) -> None:
    ceiling = TOLERANCES.FLOAT_CEILING
    for value in entries.values():
        if not value <= ceiling:
            msg = (
                f"Mass {value} exceeds the float ceiling {ceiling:g} at step {step}; "
                "rerun with the log-masses option (--log-mass)"
            )
            field_logger.error(msg)
            raise MassOverflowError(msg)


def scale_add(fields: Iterable[tuple], time_index: int) -> MassField:
    """
    Linear combination sum_i a_i M_i of float or exact fields.

    Raises:
        ValueError: the combination leaves a nonzero mass below 1
    """
    entries: Dict[Site, Mass] = {}
    mode = MassMode.FLOAT
    for coefficient, field_ in fields:
        mode = field_.mode
        for x, m in field_.entries.items():
            entries[x] = entries.get(x, 0) + coefficient * m
    return MassField({x: v for x, v in entries.items() if v != 0}, time_index, mode)
