"""
Heavy entries: a site x maximizing P(B_{o,x} >= 1 + delta).
"""

import math
from typing import Dict, Optional

from loguru import logger

from lingrowth.config.env import DEFAULTS
from lingrowth.core.lattice import SITE_ORDER, Site, origin
from lingrowth.exceptions import NoHeavyEntryError, SizeGuardError, UnsupportedModelError
from lingrowth.kernels.conditions import is_binary
from lingrowth.kernels.enumeration import product_tail_law
from lingrowth.kernels.models import HeavySiteInfo, ModelSpec, Product, Table, WeightedBernoulli
from lingrowth.kernels.samplers import product_slice
from lingrowth.kernels.streams import Purpose, derive_seed

heavy_logger = logger.bind(component="kernels")


def _argmax(law: Dict[Site, float]) -> Optional[Site]:
    best = max(law.values(), default=0.0)
    if best <= 0:
        return None
    return SITE_ORDER.min([x for x, prob in law.items() if prob == best])


def _table_law(model: ModelSpec, threshold: float) -> Dict[Site, float]:
    # B_{o,x} reads offset x of the pattern of column x (LSE) or of row o (DLSE)
    law: Dict[Site, float] = {}
    for pattern in model.variant.patterns:
        for e in set(pattern.nonzero_offsets()):
            if pattern.value_at(e) >= threshold:
                law[e] = law.get(e, 0.0) + pattern.prob
    return law


def _monte_carlo_law(model: ModelSpec, threshold: float, seed: int, samples: int) -> Dict[Site, float]:
    stream_seed = derive_seed(seed, int(Purpose.HEAVY_MC))
    here = origin(model.dimension)
    hits: Dict[Site, int] = {}
    for block in range(1, samples + 1):
        row = product_slice(model, stream_seed, block, [here]).row(here)
        for x, value in row.items():
            if value >= threshold:
                hits[x] = hits.get(x, 0) + 1
    return {x: count / samples for x, count in hits.items()}


def heavy_site(
    model: ModelSpec,
    delta: float,
    epsilon: float = 0.0,
    seed: int = 0,
    samples: Optional[int] = None,
) -> HeavySiteInfo:
    """
    Find the heavy site of a kernel law.

    Exact for every catalogued single-step variant and for products small
    enough to enumerate; Monte Carlo with a binomial standard error for the
    remaining products.

    Args:
        model: Kernel law
        delta: Heaviness margin, entries must reach 1 + delta
        epsilon: Fallback slack; the search runs at delta - epsilon
        seed: Seed of the Monte Carlo stream
        samples: Monte Carlo sample count, defaults to HEAVY_MC_SAMPLES

    Returns:
        HeavySiteInfo carrying the effective delta

    Raises:
        NoHeavyEntryError: no entry reaches 1 + delta - epsilon with positive probability
    """
    if delta <= 0:
        msg = f"delta must be positive, got {delta}"
        heavy_logger.error(msg)
        raise ValueError(msg)
    if not 0 <= epsilon < delta:
        msg = f"epsilon must lie in [0, delta), got {epsilon}"
        heavy_logger.error(msg)
        raise ValueError(msg)

    effective = delta - epsilon
    threshold = 1.0 + effective
    variant = model.variant
    exact = True
    drawn = 0

    if isinstance(variant, Product):
        try:
            law = product_tail_law(model, threshold)
        except (SizeGuardError, UnsupportedModelError):
            exact = False
            drawn = samples or DEFAULTS.HEAVY_MC_SAMPLES
            law = _monte_carlo_law(model, threshold, seed, drawn)
    elif is_binary(model):
        law = {}
    elif isinstance(variant, WeightedBernoulli):
        law = {e: variant.p for e in model.neighborhood} if variant.v >= threshold else {}
    elif isinstance(variant, Table):
        law = _table_law(model, threshold)
    else:
        law = {}

    site = _argmax(law)
    if site is None:
        msg = f"No entry of {model.label()} reaches 1 + {effective:g} with positive probability"
        heavy_logger.error(msg)
        raise NoHeavyEntryError(msg)

    prob = min(law[site], 1.0)
    stderr = 0.0 if exact else math.sqrt(prob * (1.0 - prob) / drawn)
    heavy_logger.debug(f"Heavy site of {model.label()} at delta={effective:g}: {site} with prob {prob:.6g}")
    return HeavySiteInfo(
        site=site, delta=effective, prob=prob, stderr=stderr, exact=exact, samples=drawn
    )
