"""
Exhaustive enumeration of the law of row o of a product kernel.

Supported for products of SiteOP and BondOP bases, whose entries are driven
by independent Bernoulli variables. Every relevant variable (the site or bond
variables of the space-time cone of o) is enumerated, so the returned
probabilities are exact up to float rounding.
"""

from itertools import product
from typing import Dict

from loguru import logger

from lingrowth.config.env import DEFAULTS
from lingrowth.core.lattice import Site, add, origin
from lingrowth.exceptions import SizeGuardError, UnsupportedModelError
from lingrowth.kernels.models import BondOP, ModelSpec, Product, SiteOP

enumeration_logger = logger.bind(component="kernels")


def _cone_variables(model: ModelSpec) -> list[tuple]:
    variant = model.variant
    base = variant.base
    offsets = base.offsets
    here = origin(model.dimension)
    layer = {here}
    variables = []
    for k in range(1, variant.m + 1):
        targets = sorted({add(x, e) for x in layer for e in offsets})
        if isinstance(base.variant, SiteOP):
            variables.extend(("site", k, y) for y in targets)
        else:
            variables.extend(("bond", k, x, add(x, e)) for x in sorted(layer) for e in offsets)
        layer = set(targets)
    return variables


def enumeration_variable_count(model: ModelSpec) -> int:
    _require_enumerable(model)
    return len(_cone_variables(model))


def _require_enumerable(model: ModelSpec) -> None:
    variant = model.variant
    if not isinstance(variant, Product) or not isinstance(
        variant.base.variant, (SiteOP, BondOP)
    ):
        msg = f"Exhaustive enumeration supports products of SiteOP/BondOP, got {model.label()}"
        enumeration_logger.error(msg)
        raise UnsupportedModelError(msg)


def product_tail_law(
    model: ModelSpec, threshold: float, max_variables: int | None = None
) -> Dict[Site, float]:
    """
    P((B_1 ... B_m)_{o,z} >= threshold) for every reachable z.

    Raises:
        UnsupportedModelError: the base is not SiteOP/BondOP
        SizeGuardError: more relevant variables than ``max_variables``
    """
    _require_enumerable(model)
    max_variables = max_variables or DEFAULTS.ENUMERATION_MAX_VARIABLES
    variables = _cone_variables(model)
    if len(variables) > max_variables:
        msg = (
            f"{len(variables)} Bernoulli variables exceed the enumeration guard "
            f"of {max_variables}"
        )
        enumeration_logger.warning(msg)
        raise SizeGuardError(msg)

    variant = model.variant
    p = variant.base.variant.p
    offsets = variant.base.offsets
    index = {var: i for i, var in enumerate(variables)}
    here = origin(model.dimension)
    law: Dict[Site, float] = {}

    for assignment in product((0, 1), repeat=len(variables)):
        ones = sum(assignment)
        weight = p**ones * (1 - p) ** (len(assignment) - ones)
        if weight == 0:
            continue
        row = {here: 1}
        for k in range(1, variant.m + 1):
            nxt: Dict[Site, int] = {}
            for x, mass in row.items():
                for e in offsets:
                    y = add(x, e)
                    key = ("site", k, y) if ("site", k, y) in index else ("bond", k, x, y)
                    if assignment[index[key]]:
                        nxt[y] = nxt.get(y, 0) + mass
            row = nxt
        for z, value in row.items():
            if value >= threshold:
                law[z] = law.get(z, 0.0) + weight
    enumeration_logger.debug(
        f"Enumerated {2 ** len(variables)} assignments of {model.label()}"
    )
    return law
