from typing import Optional, Tuple

from loguru import logger

from lingrowth.core.lattice import origin
from lingrowth.estimator.replicas import map_replicas, proportion
from lingrowth.estimator.report import Estimate
from lingrowth.evolution.environment import Environment
from lingrowth.evolution.restart import SupportChain
from lingrowth.kernels.models import ModelSpec

survival_logger = logger.bind(component="estimator")


def survival_sweep(model: ModelSpec, seed: int, horizon: int) -> Tuple[bool, int]:
    """(survives to ``horizon``, support size at the horizon) of one replica."""
    chain = SupportChain(Environment(model, seed), 0, origin(model.dimension), horizon)
    support = chain.support_at(horizon)
    return bool(support), len(support)


def survival_prob(
    model: ModelSpec,
    horizon: int,
    replicas: int,
    seed: int,
    workers: Optional[int] = None,
) -> Estimate:
    """
    Fraction of replicas whose chain from delta_o is alive at ``horizon``.

    Survival to a finite horizon over-includes the infinite-time event.
    """
    outcomes = map_replicas(lambda s: survival_sweep(model, s, horizon)[0], seed, replicas, workers)
    estimate = proportion(outcomes)
    survival_logger.info(f"Survival of {model.label()} to N={horizon}: {estimate}")
    return estimate
