import math
from typing import Optional

from loguru import logger

from lingrowth.estimator.report import Estimate, GrowthReport
from lingrowth.estimator.survival import survival_prob
from lingrowth.exceptions import NoHeavyEntryError
from lingrowth.kernels.heavy import heavy_site
from lingrowth.kernels.models import HeavySiteInfo, ModelSpec

cdelta_logger = logger.bind(component="estimator")


def block_model(model: ModelSpec, m: int) -> ModelSpec:
    """The m-step product B_1 ... B_m, the model itself for m = 1."""
    return model if m == 1 else ModelSpec.product(model, m)


def heavy_or_none(
    model: ModelSpec, delta: float, epsilon: float = 0.0, seed: int = 0
) -> Optional[HeavySiteInfo]:
    try:
        return heavy_site(model, delta, epsilon=epsilon, seed=seed)
    except NoHeavyEntryError:
        return None


def c_delta(
    model: ModelSpec,
    delta: float,
    m: int,
    horizon: int,
    replicas: int,
    seed: int,
    epsilon: float = 0.0,
    survival: Optional[Estimate] = None,
    workers: Optional[int] = None,
) -> GrowthReport:
    """
    Estimate c_delta of the m-step product kernel.

    Survival is estimated on the base chain, the heavy probability on the
    product law; a kernel without heavy entries yields c_delta_hat = 0.

    Args:
        model: Base kernel law
        delta: Heaviness margin
        m: Product length, m >= 1
        horizon: Survival horizon
        replicas: Survival replicas
        seed: Master seed
        epsilon: Heavy-site fallback slack
        survival: Reuse an existing survival estimate
        workers: Replica threads

    Returns:
        GrowthReport without a fitted rate
    """
    if m < 1:
        msg = f"Product length must be >= 1, got {m}"
        cdelta_logger.error(msg)
        raise ValueError(msg)
    survival = survival or survival_prob(model, horizon, replicas, seed, workers)
    heavy = heavy_or_none(block_model(model, m), delta, epsilon, seed)
    heavy_prob = heavy.prob if heavy else 0.0
    heavy_stderr = heavy.stderr if heavy else 0.0
    effective = heavy.delta if heavy else delta - epsilon
    c_hat = survival.value * heavy_prob
    c_stderr = math.hypot(heavy_prob * survival.stderr, survival.value * heavy_stderr)
    report = GrowthReport(
        model=model,
        delta=delta,
        epsilon=epsilon,
        m=m,
        horizon=horizon,
        replicas=replicas,
        survival_hat=survival.value,
        survival_stderr=survival.stderr,
        heavy_site=heavy.site if heavy else None,
        heavy_prob=heavy_prob,
        heavy_stderr=heavy_stderr,
        heavy_exact=heavy.exact if heavy else True,
        c_delta_hat=c_hat,
        c_delta_stderr=c_stderr,
        bound=c_hat * math.log1p(effective) / m,
    )
    cdelta_logger.info(
        f"c_delta({model.label()}, delta={delta}, m={m}) = {c_hat:.6g} ± {c_stderr:.2g}, "
        f"bound {report.bound:.6g}"
    )
    return report
