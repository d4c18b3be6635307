import math

import pytest

from lingrowth.estimator.growth import growth_replicas
from lingrowth.estimator.replicas import map_replicas, mean, proportion, replica_seeds


def test_seeds_are_distinct_and_reproducible():
    seeds = replica_seeds(5, 50)
    assert len(set(seeds)) == 50
    assert seeds == replica_seeds(5, 50)
    assert seeds != replica_seeds(6, 50)


@pytest.mark.parametrize("workers", [1, 4])
def test_results_follow_replica_order(workers):
    assert map_replicas(lambda s: s, 3, 20, workers) == replica_seeds(3, 20)


def test_at_least_one_replica():
    with pytest.raises(ValueError):
        map_replicas(lambda s: s, 0, 0)


def test_proportion():
    estimate = proportion([True, False, True, True])
    assert estimate.value == 0.75
    assert estimate.stderr == pytest.approx(math.sqrt(0.75 * 0.25 / 4))
    assert estimate.count == 4


def test_mean():
    estimate = mean([1.0, 2.0, 3.0])
    assert estimate.value == 2.0
    assert estimate.stderr == pytest.approx(math.sqrt(1 / 3))
    assert mean([5.0]).stderr == 0.0
    with pytest.raises(ValueError):
        mean([])


def test_worker_count_does_not_change_results(weighted, seed):
    serial = growth_replicas(weighted, 25, 8, seed, workers=1)
    threaded = growth_replicas(weighted, 25, 8, seed, workers=3)
    assert serial == threaded
