"""
The exploratory path gamma.

At each step the path prefers the heavy direction (rule ii), else the first
open neighbour (rule iii), else it backtracks to the latest earlier point of
the path whose restart chain is still alive and moves to the first site that
chain occupies (rule iv), else it returns to its start (rule v).
"""

from typing import Dict, List, Optional

from loguru import logger

from lingrowth.core.lattice import SITE_ORDER, Site, add, origin, sub
from lingrowth.evolution.restart import SupportChain
from lingrowth.evolution.trajectory import Trajectory
from lingrowth.exceptions import NoHeavyEntryError
from lingrowth.kernels.heavy import heavy_site
from lingrowth.kernels.models import HeavySiteInfo, ModelSpec
from lingrowth.pathfinder.trace import PathTrace, Rule

gamma_logger = logger.bind(component="pathfinder")


def preferred_direction(
    model: ModelSpec, delta: float, epsilon: float = 0.0, seed: int = 0
) -> HeavySiteInfo:
    """
    Heavy site of the model, or for kernels without heavy entries the first
    offset in site order with zero heavy probability.
    """
    try:
        return heavy_site(model, delta, epsilon=epsilon, seed=seed)
    except NoHeavyEntryError:
        site = SITE_ORDER.min(model.offsets)
        gamma_logger.info(f"{model.label()} has no heavy entry; preferring direction {site}")
        return HeavySiteInfo(site=site, delta=delta - epsilon, prob=0.0)


def _first_offset(base: Site, support: frozenset) -> Site:
    return add(base, SITE_ORDER.min(sub(y, base) for y in support))


def build_gamma_from(
    trajectory: Trajectory,
    m: int,
    v: Site,
    heavy: HeavySiteInfo,
    until: Optional[int] = None,
) -> PathTrace:
    """
    gamma^{(m,v)} on [m, until]: backtracking never reaches before m and
    rule (v) returns to v.

    Only slices m+1..until are read.
    """
    horizon = trajectory.horizon
    until = horizon if until is None else until
    if not 0 <= m <= until <= horizon:
        msg = f"Path window [{m}, {until}] is outside of [0, {horizon}]"
        gamma_logger.error(msg)
        raise ValueError(msg)

    environment = trajectory.environment
    x_star = tuple(heavy.site)
    gamma: List[Site] = [v]
    rules: List[Rule] = []
    t_back: List[Optional[int]] = []
    chains: Dict[int, SupportChain] = {}
    retired: set = set()

    for n in range(m, until):
        here = gamma[-1]
        if environment.entry(n + 1, here, add(here, x_star)) > 0:
            gamma.append(add(here, x_star))
            rules.append(Rule.HEAVY)
            t_back.append(None)
            continue

        successors = environment.successors(n + 1, (here,))
        if successors:
            gamma.append(_first_offset(here, successors))
            rules.append(Rule.NEAREST)
            t_back.append(None)
            continue

        for k in range(n - 1, m - 1, -1):
            if k in retired:
                continue
            chain = chains.get(k)
            if chain is None:
                chain = chains[k] = SupportChain(environment, k, gamma[k - m], horizon)
            support = chain.support_at(n + 1)
            if support:
                gamma.append(_first_offset(gamma[k - m], support))
                rules.append(Rule.BACKTRACK)
                t_back.append(k)
                break
            # an extinct restart chain stays extinct
            retired.add(k)
            del chains[k]
        else:
            gamma.append(v)
            rules.append(Rule.RESET)
            t_back.append(None)

    trace = PathTrace(
        start_time=m,
        start_site=v,
        heavy_site=x_star,
        delta=heavy.delta,
        gamma=gamma,
        rules=rules,
        t_back=t_back,
    )
    gamma_logger.debug(f"gamma from ({m}, {v}) to {until}: {trace.rule_histogram()}")
    return trace


def build_gamma(trajectory: Trajectory, heavy: HeavySiteInfo) -> PathTrace:
    """gamma started from (0, o) over the whole horizon."""
    return build_gamma_from(trajectory, 0, origin(trajectory.dimension), heavy)
