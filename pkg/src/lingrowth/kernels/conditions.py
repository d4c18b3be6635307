"""
Exact structural properties of kernel laws used by the trichotomy classifier.
"""

from loguru import logger

from lingrowth.exceptions import UnsupportedModelError
from lingrowth.kernels.models import (
    COLUMN,
    ROW,
    BcppDlse,
    BcppLse,
    BondOP,
    ModelSpec,
    Product,
    SiteOP,
    Table,
    WeightedBernoulli,
)

conditions_logger = logger.bind(component="kernels")


def is_binary(model: ModelSpec) -> bool:
    """True when every entry of B is almost surely 0 or 1."""
    variant = model.variant
    if isinstance(variant, (SiteOP, BondOP, BcppLse, BcppDlse)):
        return True
    if isinstance(variant, WeightedBernoulli):
        return variant.v in (0, 1) or variant.p == 0
    if isinstance(variant, Table):
        return all(
            pattern.prob == 0 or all(pattern.value_at(e) in (0, 1) for e in pattern.nonzero_offsets())
            for pattern in variant.patterns
        )
    base = variant.base
    if variant.m == 1:
        return is_binary(base)
    if isinstance(base.variant, Product):
        return False
    # at most one nonzero entry per unit keeps products binary
    return is_binary(base) and not two_site_condition(base)


def two_site_condition(model: ModelSpec) -> bool:
    """
    The congestion condition of the trichotomy.

    Column (LSE) kernels: P(A_{-x,o} >= 1 and A_{-y,o} >= 1) > 0 for some
    distinct x, y. Row (DLSE) kernels: P(A_{o,x} >= 1 and A_{o,y} >= 1) > 0.
    Both read "one unit pattern has two nonzero entries with positive
    probability".
    """
    variant = model.variant
    if isinstance(variant, Product):
        msg = "The two-site condition is defined for LSE/DLSE kernels, not products"
        conditions_logger.error(msg)
        raise UnsupportedModelError(msg)
    if isinstance(variant, (SiteOP, BondOP)):
        return variant.p > 0 and len(model.offsets) >= 2
    if isinstance(variant, (BcppLse, BcppDlse)):
        return variant.p > 0 and variant.q > 0
    if isinstance(variant, WeightedBernoulli):
        return variant.p > 0 and variant.v > 0 and len(model.neighborhood) >= 2
    return any(
        pattern.prob > 0 and len(set(pattern.nonzero_offsets())) >= 2
        for pattern in variant.patterns
    )


def is_coalescing_walk(model: ModelSpec) -> bool:
    """Row kernel of the form A_{x,y} = delta_{x+e_x, y}."""
    variant = model.variant
    if model.orientation != ROW:
        return False
    if isinstance(variant, BcppDlse):
        return variant.p == 1 and variant.q == 0
    if isinstance(variant, Table):
        return all(
            pattern.prob == 0
            or (
                len(set(pattern.nonzero_offsets())) == 1
                and pattern.value_at(pattern.nonzero_offsets()[0]) == 1
            )
            for pattern in variant.patterns
        )
    return False


def is_nonrandom(model: ModelSpec) -> bool:
    variant = model.variant
    if isinstance(variant, (SiteOP, BondOP)):
        return variant.p in (0, 1)
    if isinstance(variant, (BcppLse, BcppDlse)):
        # the direction e is uniform on 2d >= 2 choices
        return variant.p == 0 and variant.q in (0, 1)
    if isinstance(variant, WeightedBernoulli):
        return variant.p in (0, 1) or variant.v == 0
    if isinstance(variant, Table):
        return sum(1 for pattern in variant.patterns if pattern.prob > 0) == 1
    return is_nonrandom(variant.base)


def is_trivial(model: ModelSpec) -> bool:
    """Trivial LSE: nonrandom. Trivial DLSE: nonrandom or coalescing walks."""
    if model.orientation == COLUMN:
        return is_nonrandom(model)
    return is_nonrandom(model) or is_coalescing_walk(model)
