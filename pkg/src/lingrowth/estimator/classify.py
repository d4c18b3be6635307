"""
Trichotomy classifier for LSE and DLSE kernels.

case1: some delta of the grid has c_delta(A_1) significantly above zero.
case2: otherwise, the chain survives significantly often and the two-site
       condition holds.
case3: neither; the chain cannot grow exponentially.
"""

from typing import Dict, List, Optional, Sequence

from loguru import logger
from pydantic import BaseModel, Field

from lingrowth.config.constants import SCHEMA_VERSION
from lingrowth.config.env import TOLERANCES
from lingrowth.estimator.cdelta import c_delta
from lingrowth.estimator.replicas import map_replicas, mean, proportion
from lingrowth.estimator.report import Estimate, GrowthReport, Verdict
from lingrowth.estimator.survival import survival_sweep
from lingrowth.exceptions import UnsupportedModelError
from lingrowth.kernels.conditions import is_binary, is_trivial, two_site_condition
from lingrowth.kernels.models import ModelSpec

classify_logger = logger.bind(component="estimator")


class Classification(BaseModel):
    schema_version: str = SCHEMA_VERSION
    model: ModelSpec
    verdict: Verdict
    reason: str
    horizon: int
    replicas: int
    survival: Estimate
    reports: List[GrowthReport]
    two_site_condition: bool
    binary: bool
    trivial: bool
    support_size_hat: Estimate
    tolerances: Dict[str, float] = Field(default_factory=TOLERANCES.echo)
    config_hash: Optional[str] = None
    version: Optional[str] = None

    def to_json(self) -> dict:
        payload = self.model_dump(mode="json")
        payload["model_label"] = self.model.label()
        return payload


def _decide(
    reports: Sequence[GrowthReport], survival: Estimate, two_site: bool
) -> tuple[Verdict, str]:
    sigma = TOLERANCES.SIGMA
    for report in reports:
        c_hat = Estimate(value=report.c_delta_hat, stderr=report.c_delta_stderr)
        if c_hat.significant(sigma):
            return Verdict.CASE1, f"c_delta({report.delta}) = {c_hat} is above zero"
    if survival.significant(sigma) and two_site:
        return Verdict.CASE2, f"survival {survival} and the two-site condition holds"
    if survival.significant(sigma):
        return Verdict.CASE3, f"survival {survival} but the two-site condition fails"
    if survival.value == 0:
        return Verdict.CASE3, "no replica survived"
    noisy = [r.delta for r in reports if r.c_delta_hat > 0]
    return (
        Verdict.INCONCLUSIVE,
        f"survival {survival} and c_delta at deltas {noisy} are within {sigma} standard errors of zero",
    )


def classify(
    model: ModelSpec,
    deltas: Sequence[float],
    horizon: int,
    replicas: int,
    seed: int = 0,
    workers: Optional[int] = None,
) -> Classification:
    """
    Place a kernel in the trichotomy.

    Raises:
        UnsupportedModelError: the model is a product rather than an LSE/DLSE kernel
    """
    if model.orientation is None:
        msg = f"Classification needs an LSE or DLSE kernel, got {model.label()}"
        classify_logger.error(msg)
        raise UnsupportedModelError(msg)
    if not deltas:
        msg = "The delta grid is empty"
        classify_logger.error(msg)
        raise ValueError(msg)

    sweeps = map_replicas(lambda s: survival_sweep(model, s, horizon), seed, replicas, workers)
    survival = proportion([alive for alive, _ in sweeps])
    support = mean([float(size) for _, size in sweeps])
    two_site = two_site_condition(model)
    reports = [
        c_delta(model, delta, 1, horizon, replicas, seed, survival=survival)
        for delta in sorted(deltas)
    ]
    verdict, reason = _decide(reports, survival, two_site)
    if verdict in (Verdict.CASE3, Verdict.INCONCLUSIVE):
        reports = [
            report.model_copy(update={"bound": 0.0, "classifier": verdict}) for report in reports
        ]
    else:
        reports = [report.model_copy(update={"classifier": verdict}) for report in reports]

    classify_logger.info(f"{model.label()}: {verdict.value} ({reason})")
    return Classification(
        model=model,
        verdict=verdict,
        reason=reason,
        horizon=horizon,
        replicas=replicas,
        survival=survival,
        reports=reports,
        two_site_condition=two_site,
        binary=is_binary(model),
        trivial=is_trivial(model),
        support_size_hat=support,
    )
