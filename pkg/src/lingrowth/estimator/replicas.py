"""
Replica farm: an order-preserving map over derived seeds and compensated
reductions of its results.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from loguru import logger

from lingrowth.config.env import DEFAULTS
from lingrowth.estimator.report import Estimate
from lingrowth.kernels.streams import derive_seed

replica_logger = logger.bind(component="estimator")

T = TypeVar("T")


def replica_seeds(master_seed: int, replicas: int) -> List[int]:
    return [derive_seed(master_seed, i) for i in range(replicas)]


def map_replicas(
    task: Callable[[int], T],
    master_seed: int,
    replicas: int,
    workers: Optional[int] = None,
) -> List[T]:
    """
    Run ``task(seed)`` for every replica seed.

    Results come back in replica order whatever the worker count.
    """
    if replicas < 1:
        msg = f"At least one replica is required, got {replicas}"
        replica_logger.error(msg)
        raise ValueError(msg)
    seeds = replica_seeds(master_seed, replicas)
    workers = workers or DEFAULTS.WORKERS
    if workers <= 1:
        return [task(seed) for seed in seeds]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(task, seed) for seed in seeds]
        results = [future.result() for future in futures]
    replica_logger.debug(f"Collected {len(results)} replicas from {workers} workers")
    return results


def proportion(flags: Sequence[bool]) -> Estimate:
    """Binomial proportion with its standard error."""
    count = len(flags)
    p = sum(1 for flag in flags if flag) / count
    return Estimate(value=p, stderr=math.sqrt(p * (1.0 - p) / count), count=count)


def mean(values: Sequence[float]) -> Estimate:
    """Sample mean with stderr = std / sqrt(R), summed with math.fsum."""
    count = len(values)
    if count == 0:
        msg = "Mean of an empty sample"
        replica_logger.error(msg)
        raise ValueError(msg)
    average = math.fsum(values) / count
    if count == 1:
        return Estimate(value=average, stderr=0.0, count=1)
    variance = math.fsum((v - average) ** 2 for v in values) / (count - 1)
    return Estimate(value=average, stderr=math.sqrt(variance / count), count=count)
