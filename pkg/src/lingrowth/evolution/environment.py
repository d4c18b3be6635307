"""
The random environment (B_n)_{n >= 1} of one replica.

Rows are memoized per step as they are first touched, so the main chain,
every restart chain and every reachability sweep read the same entries.
"""

from typing import Callable, Dict, Iterable, Mapping, Optional

from loguru import logger

from lingrowth.core.kernel_slice import KernelSlice, Row
from lingrowth.core.lattice import Site
from lingrowth.kernels.models import ModelSpec
from lingrowth.kernels.samplers import sample_slice

environment_logger = logger.bind(component="evolution")

SliceSource = Callable[[int, frozenset], KernelSlice]


class Environment:
    """
    Lazily materialized kernel slices.

    Args:
        model: Kernel law, used for the default source and the range
        seed: Replica seed
        source: Optional (step, window) -> KernelSlice replacing the sampler
    """

    def __init__(
        self, model: Optional[ModelSpec], seed: int, source: Optional[SliceSource] = None
    ):
        if model is None and source is None:
            msg = "An environment needs a kernel law or a slice source"
            environment_logger.error(msg)
            raise ValueError(msg)
        self.model = model
        self.seed = seed
        self._source = source or (lambda step, window: sample_slice(model, seed, step, window))
        self._rows: Dict[int, Dict[Site, Row]] = {}
        self._ranges: Dict[int, int] = {}

    @classmethod
    def from_slices(cls, model: Optional[ModelSpec], slices: Mapping[int, KernelSlice]) -> "Environment":
        """Fixed environment; rows missing from ``slices`` are empty."""

        def source(step: int, window: frozenset) -> KernelSlice:
            given = slices.get(step)
            rows = {x: dict(given.row(x)) if given else {} for x in window}
            return KernelSlice(
                step=step,
                window=window,
                rows=rows,
                range=given.range if given else (model.range if model else 1),
                validated=False,
            )

        return cls(model, seed=0, source=source)

    def slice(self, step: int, window: Iterable[Site]) -> KernelSlice:
        """B_step restricted to ``window``; sampled rows are reused."""
        window = frozenset(window)
        cache = self._rows.setdefault(step, {})
        missing = frozenset(x for x in window if x not in cache)
        if missing:
            fresh = self._source(step, missing)
            cache.update({x: fresh.row(x) for x in missing})
            self._ranges[step] = max(self._ranges.get(step, 1), fresh.range)
        return KernelSlice(
            step=step,
            window=window,
            rows={x: cache[x] for x in window},
            range=self._ranges.get(step, self.default_range),
            validated=False,
        )

    @property
    def default_range(self) -> int:
        return self.model.range if self.model is not None else 1

    def row(self, step: int, x: Site) -> Row:
        return self.slice(step, (x,)).rows[x]

    def entry(self, step: int, x: Site, y: Site) -> float:
        return self.row(step, x).get(y, 0.0)

    def successors(self, step: int, sites: Iterable[Site]) -> frozenset:
        """Sites reached in one step from ``sites`` through nonzero entries of B_step."""
        kernel = self.slice(step, sites)
        return frozenset(y for row in kernel.rows.values() for y in row)

    def cached_rows(self) -> int:
        return sum(len(rows) for rows in self._rows.values())
