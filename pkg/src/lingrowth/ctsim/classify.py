"""
Growth classification of the continuous-time processes.

case1: P(sum K >= 1 + delta) > 0 for some delta of the grid and the process
       survives significantly often; the rate on survival is positive.
case2: otherwise; limsup (1/t) log |Y_t| <= 0.
case3: the degenerate coalescing walk P(sum K = 1) = 1, read off the law
       without simulating.
"""

from typing import Dict, List, Optional, Sequence

from loguru import logger
from pydantic import BaseModel, Field

from lingrowth.config.constants import SCHEMA_VERSION
from lingrowth.config.env import TOLERANCES
from lingrowth.core.lattice import origin
from lingrowth.core.mass_field import MassField, MassMode
from lingrowth.ctsim.kernel import CtKernel
from lingrowth.ctsim.simulate import ct_run_y, ct_run_z
from lingrowth.estimator.growth import fit_log_masses
from lingrowth.estimator.replicas import map_replicas, mean, proportion
from lingrowth.estimator.report import Estimate, Verdict

ct_classify_logger = logger.bind(component="ctsim")


class CtClassification(BaseModel):
    schema_version: str = SCHEMA_VERSION
    kernel: CtKernel
    process: str
    verdict: Verdict
    reason: str
    heavy_sum_prob: Dict[str, float]
    coalescing: bool
    t_end: float
    replicas: int
    survival: Optional[Estimate] = None
    fitted_rate: Optional[Estimate] = None
    rates: List[float] = Field(default_factory=list)
    tolerances: Dict[str, float] = Field(default_factory=TOLERANCES.echo)
    config_hash: Optional[str] = None
    version: Optional[str] = None


def ct_classify(
    kernel: CtKernel,
    deltas: Sequence[float],
    t_end: float,
    replicas: int,
    seed: int = 0,
    dual: bool = False,
    mode: MassMode = MassMode.FLOAT,
    workers: Optional[int] = None,
) -> CtClassification:
    heavy = {f"{delta:g}": kernel.heavy_sum_prob(delta) for delta in sorted(deltas)}
    common = dict(
        kernel=kernel,
        process="Z" if dual else "Y",
        heavy_sum_prob=heavy,
        coalescing=kernel.is_coalescing(),
        t_end=t_end,
        replicas=replicas,
    )
    if kernel.is_coalescing():
        reason = "P(sum K = 1) = 1: coalescing random walk, the total mass cannot grow"
        ct_classify_logger.info(reason)
        return CtClassification(verdict=Verdict.CASE3, reason=reason, **{**common, "replicas": 0})

    runner = ct_run_z if dual else ct_run_y
    start = MassField.delta(origin(kernel.dimension), 0, mode)

    def replica(s: int) -> Optional[float]:
        run = runner(kernel, start, t_end, s, mode=mode)
        if run.final.field.is_empty():
            return None
        return fit_log_masses(run.log_masses()).value

    rates = map_replicas(replica, seed, replicas, workers)
    survival = proportion([rate is not None for rate in rates])
    surviving = [rate for rate in rates if rate is not None]
    fitted = mean(surviving) if surviving else None

    if any(p > 0 for p in heavy.values()):
        if survival.significant():
            verdict, reason = Verdict.CASE1, f"P(sum K >= 1 + delta) > 0 and survival {survival}"
        elif survival.value == 0:
            verdict, reason = Verdict.CASE2, "no replica survived"
        else:
            verdict, reason = Verdict.INCONCLUSIVE, f"survival {survival} is within noise of zero"
    else:
        verdict, reason = Verdict.CASE2, "P(sum K >= 1 + delta) = 0 on the whole grid"
    ct_classify_logger.info(f"{kernel.label()}: {verdict.value} ({reason})")
    return CtClassification(
        verdict=verdict,
        reason=reason,
        survival=survival,
        fitted_rate=fitted,
        rates=surviving,
        **common,
    )
