"""
Samplers for every kernel variant.

Randomness is drawn per independence unit: column y for LSE variants, row x
for DLSE variants. A unit's draws depend only on (seed, step, unit), so any
window sees the same entries for the units it shares with another window.
"""

from typing import Dict, Iterable, List

import numpy as np
from loguru import logger

from lingrowth.core.kernel_slice import KernelSlice, multiply_slices
from lingrowth.core.lattice import SITE_ORDER, Site, add, origin, sub, unit_vectors
from lingrowth.kernels.models import (
    COLUMN,
    BcppDlse,
    BcppLse,
    BondOP,
    ModelSpec,
    Product,
    SiteOP,
    Table,
    WeightedBernoulli,
)
from lingrowth.kernels.streams import Purpose, uniforms

sampler_logger = logger.bind(component="kernels")

Pattern = Dict[Site, float]


def unit_patterns(model: ModelSpec, seed: int, step: int, units: List[Site]) -> List[Pattern]:
    """
    Draw the offset pattern of each independence unit.

    For a column unit y the pattern maps e to A_{y-e, y}; for a row unit x it
    maps e to A_{x, x+e}.
    """
    variant = model.variant
    d = model.dimension
    if not units:
        return []

    if isinstance(variant, SiteOP):
        u = uniforms(seed, Purpose.KERNEL, step, units, 1)[:, 0]
        opened = {e: 1.0 for e in model.offsets}
        return [dict(opened) if draw < variant.p else {} for draw in u]

    if isinstance(variant, BondOP):
        offsets = model.offsets
        u = uniforms(seed, Purpose.KERNEL, step, units, len(offsets))
        return [
            {e: 1.0 for e, draw in zip(offsets, row) if draw < variant.p} for row in u
        ]

    if isinstance(variant, (BcppLse, BcppDlse)):
        directions = unit_vectors(d)
        here = origin(d)
        u = uniforms(seed, Purpose.KERNEL, step, units, 3)
        patterns = []
        for eta, choice, zeta in u:
            pattern: Pattern = {}
            if eta < variant.p:
                pattern[directions[min(int(choice * len(directions)), len(directions) - 1)]] = 1.0
            if zeta < variant.q:
                pattern[here] = pattern.get(here, 0.0) + 1.0
            patterns.append(pattern)
        return patterns

    if isinstance(variant, WeightedBernoulli):
        neighborhood = model.neighborhood
        if variant.v == 0:
            return [{} for _ in units]
        u = uniforms(seed, Purpose.KERNEL, step, units, len(neighborhood))
        return [
            {e: float(variant.v) for e, draw in zip(neighborhood, row) if draw < variant.p}
            for row in u
        ]

    if isinstance(variant, Table):
        cumulative = np.cumsum([pattern.prob for pattern in variant.patterns])
        tables = []
        for pattern in variant.patterns:
            table: Pattern = {}
            for e, value in pattern.entries:
                if value:
                    table[tuple(e)] = table.get(tuple(e), 0.0) + float(value)
            tables.append(table)
        u = uniforms(seed, Purpose.KERNEL, step, units, 1)[:, 0]
        picks = np.minimum(np.searchsorted(cumulative, u, side="right"), len(tables) - 1)
        return [dict(tables[i]) for i in picks]

    msg = f"No unit sampler for variant {variant.kind}"
    sampler_logger.error(msg)
    raise TypeError(msg)


def sample_slice(model: ModelSpec, seed: int, step: int, window: Iterable[Site]) -> KernelSlice:
    """
    Slice of B_step on ``window`` x (``window`` dilated by the range).

    Args:
        model: Kernel law
        seed: Replica seed
        step: Time step n >= 1
        window: Source sites

    Returns:
        KernelSlice whose rows are the sources of ``window``
    """
    window = frozenset(window)
    if isinstance(model.variant, Product):
        return product_slice(model, seed, step, window)
    rows: Dict[Site, Pattern] = {x: {} for x in window}
    if window:
        if model.orientation == COLUMN:
            columns = SITE_ORDER.sorted({add(x, e) for x in window for e in model.offsets})
            for y, pattern in zip(columns, unit_patterns(model, seed, step, columns)):
                for e, value in pattern.items():
                    x = sub(y, e)
                    if x in rows:
                        rows[x][y] = rows[x].get(y, 0.0) + value
        else:
            sources = SITE_ORDER.sorted(window)
            for x, pattern in zip(sources, unit_patterns(model, seed, step, sources)):
                rows[x] = {add(x, e): value for e, value in pattern.items()}
    return KernelSlice(step=step, window=window, rows=rows, range=model.range, validated=False)


def product_slice(model: ModelSpec, seed: int, block: int, window: Iterable[Site]) -> KernelSlice:
    """
    Slice of the block product B_{(block-1)m+1} ... B_{block m}.

    The base slices are drawn with the same seed and their own step indices,
    so a product chain and the base chain share one environment.
    """
    variant = model.variant
    if not isinstance(variant, Product):
        msg = f"product_slice needs a Product model, got {model.kind}"
        sampler_logger.error(msg)
        raise TypeError(msg)
    window = frozenset(window)
    slices = []
    current = window
    for k in range(variant.m):
        step = (block - 1) * variant.m + k + 1
        base_slice = sample_slice(variant.base, seed, step, current)
        slices.append(base_slice)
        current = frozenset(y for row in base_slice.rows.values() for y in row)
    return multiply_slices(slices, step=block)
