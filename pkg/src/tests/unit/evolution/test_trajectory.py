import math

import numpy as np
import pytest

from lingrowth.core.mass_field import MassMode
from lingrowth.estimator.replicas import replica_seeds
from lingrowth.evolution.trajectory import run
from lingrowth.exceptions import MassOverflowError
from lingrowth.kernels.models import ModelSpec


def test_full_site_percolation_counts_binomial_paths(full_site_op):
    trajectory = run(full_site_op, 0, 10, mode=MassMode.EXACT)
    for n in range(11):
        assert sum(trajectory.field_at(n).entries.values()) == 2**n
        for k in range(-n, n + 1, 2):
            assert trajectory.field_at(n).get((k,)) == math.comb(n, (n + k) // 2)
    assert trajectory.extinction_time() is None


def test_dead_environment_goes_extinct_at_one(dead_site_op):
    trajectory = run(dead_site_op, 0, 5)
    assert trajectory.total_masses()[:2] == [1.0, 0.0]
    assert trajectory.extinction_time() == 1


def test_log_mode_tracks_float_mode(weighted, seed):
    floats = run(weighted, seed, 60)
    logs = run(weighted, seed, 60, mode=MassMode.LOG)
    for a, b in zip(floats.log_masses(), logs.log_masses()):
        if math.isinf(a):
            assert math.isinf(b)
        else:
            assert b == pytest.approx(a, rel=1e-9, abs=1e-9)


def test_float_overflow_asks_for_log_mode(seed):
    model = ModelSpec.weighted(1.0, 1e6)
    with pytest.raises(MassOverflowError):
        run(model, seed, 60)
    assert run(model, seed, 60, mode=MassMode.LOG).log_masses()[-1] > 700


def test_snapshot_rows(dead_site_op):
    rows = list(run(dead_site_op, 0, 2).snapshot_rows())
    assert rows[0] == {"n": 0, "total_mass": 1.0, "support_size": 1, "log_mass": 0.0}
    assert rows[1]["log_mass"] == "-inf"


def test_negative_horizon(weighted):
    with pytest.raises(ValueError):
        run(weighted, 0, -1)


@pytest.mark.slow
def test_mean_mass_is_the_mean_row_sum_to_the_n(seed):
    model = ModelSpec.site_op(0.6)
    masses = [run(model, s, 10).total_masses()[-1] for s in replica_seeds(seed, 10_000)]
    stderr = np.std(masses, ddof=1) / math.sqrt(len(masses))
    assert abs(np.mean(masses) - 1.2**10) < 3 * stderr
