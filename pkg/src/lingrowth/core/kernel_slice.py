"""
One time step of the random kernel restricted to a finite source window.

Only nonzero entries are stored, grouped by source row. Every source in the
window has a row, possibly empty.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from loguru import logger

from lingrowth.core.lattice import Site, linf, sub
from lingrowth.exceptions import WindowTooSmallError

slice_logger = logger.bind(component="core")

Row = Dict[Site, float]


@dataclass(frozen=True)
class KernelSlice:
    step: int
    window: frozenset
    rows: Dict[Site, Row]
    range: int
    validated: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.range < 1:
            raise ValueError(f"Kernel range must be positive, got {self.range}")
        if not self.validated:
            return
        for x, row in self.rows.items():
            for y, value in row.items():
                if value < 1:
                    msg = f"Kernel entry ({x}, {y}) = {value} is not in {{0}} U [1, inf)"
                    slice_logger.error(msg)
                    raise ValueError(msg)
                if linf(sub(x, y)) >= self.range:
                    msg = f"Kernel entry ({x}, {y}) exceeds range {self.range}"
                    slice_logger.error(msg)
                    raise ValueError(msg)

    @classmethod
    def from_entries(
        cls,
        step: int,
        window: Iterable[Site],
        entries: Mapping[Tuple[Site, Site], float],
        range: int,
    ) -> "KernelSlice":
        window = frozenset(window)
        rows: Dict[Site, Row] = {x: {} for x in window}
        for (x, y), value in entries.items():
            if value == 0:
                continue
            if x not in window:
                raise WindowTooSmallError(f"Entry source {x} outside of window")
            rows[x][y] = value
        return cls(step=step, window=window, rows=rows, range=range)

    @property
    def entries(self) -> Dict[Tuple[Site, Site], float]:
        return {(x, y): v for x, row in self.rows.items() for y, v in row.items()}

    def entry(self, x: Site, y: Site) -> float:
        row = self.rows.get(x)
        if row is None:
            msg = f"Source {x} is outside of the window of slice {self.step}"
            slice_logger.error(msg)
            raise WindowTooSmallError(msg)
        return row.get(y, 0.0)

    def row(self, x: Site) -> Row:
        return self.rows.get(x, {})

    def items(self) -> Iterator[Tuple[Site, Site, float]]:
        for x, row in self.rows.items():
            for y, value in row.items():
                yield x, y, value

    def row_sum(self, x: Site) -> float:
        return sum(self.row(x).values())

    def max_row_sum(self) -> float:
        return max((self.row_sum(x) for x in self.window), default=0.0)

    def is_binary(self) -> bool:
        return all(v == 1 for _, _, v in self.items())

    def restrict(self, window: Iterable[Site]) -> "KernelSlice":
        window = frozenset(window)
        missing = window - self.window
        if missing:
            raise WindowTooSmallError(f"Cannot restrict to {len(missing)} uncovered sources")
        return KernelSlice(
            step=self.step,
            window=window,
            rows={x: self.rows[x] for x in window},
            range=self.range,
            validated=False,
        )

    def to_json(self) -> dict:
        return {
            "n": self.step,
            "range": self.range,
            "window": sorted(list(x) for x in self.window),
            "entries": [[list(x), list(y), v] for x, y, v in sorted(self.items())],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "KernelSlice":
        entries = {(tuple(x), tuple(y)): v for x, y, v in payload["entries"]}
        window = [tuple(x) for x in payload["window"]]
        return cls.from_entries(payload["n"], window, entries, payload["range"])


def multiply_slices(slices: list[KernelSlice], step: int) -> KernelSlice:
    """Matrix product of consecutive slices, restricted to the first window.

    Each later slice must cover the targets reachable from the first window.
    """
    first = slices[0]
    rows: Dict[Site, Row] = {x: dict(first.row(x)) for x in first.window}
    total_range = first.range
    for nxt in slices[1:]:
        total_range += nxt.range - 1
        for x, row in rows.items():
            product_row: Row = {}
            for y, a in row.items():
                if y not in nxt.window:
                    msg = f"Slice {nxt.step} does not cover intermediate site {y}"
                    slice_logger.error(msg)
                    raise WindowTooSmallError(msg)
                for z, b in nxt.rows[y].items():
                    product_row[z] = product_row.get(z, 0.0) + a * b
            rows[x] = product_row
    return KernelSlice(step=step, window=first.window, rows=rows, range=total_range)
