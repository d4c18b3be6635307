import math

import pytest

from lingrowth.estimator.bounds import check_rate_bound
from lingrowth.estimator.cdelta import c_delta
from lingrowth.estimator.growth import (
    aggregate_rate,
    cesaro,
    fit_growth,
    fit_log_masses,
    growth_replicas,
    survival_growth_agreement,
    tail_window,
    trajectory_growth,
)
from lingrowth.estimator.replicas import proportion
from lingrowth.evolution.trajectory import run
from lingrowth.exceptions import ExtinctTrajectoryError
from lingrowth.kernels.models import ModelSpec


def test_tail_window():
    assert tail_window(10, 0.5) == range(5, 11)
    assert tail_window(10, 1.0) == range(0, 11)
    assert tail_window(1, 0.1) == range(0, 2)


@pytest.mark.parametrize("fraction", [0.0, 1.5, -0.2])
def test_tail_window_rejects_bad_fractions(fraction):
    with pytest.raises(ValueError):
        tail_window(10, fraction)


def test_fit_recovers_a_straight_line():
    estimate = fit_log_masses([0.3 * n + 1.0 for n in range(21)])
    assert estimate.value == pytest.approx(0.3)
    assert estimate.stderr == pytest.approx(0.0, abs=1e-9)


def test_fit_of_two_points_is_their_difference():
    assert fit_log_masses([0.0, 2.0]).value == 2.0


def test_fit_needs_two_steps():
    with pytest.raises(ValueError):
        fit_log_masses([0.0])


def test_no_rate_on_extinction():
    with pytest.raises(ExtinctTrajectoryError):
        fit_log_masses([0.0, math.log(2), -math.inf])


def test_open_lattice_doubles(full_site_op):
    assert fit_growth(run(full_site_op, 0, 30)).value == pytest.approx(math.log(2))


def test_every_replica_extinct_raises(dead_site_op):
    with pytest.raises(ExtinctTrajectoryError):
        fit_growth([run(dead_site_op, seed, 5) for seed in range(3)])


def test_fit_growth_averages_survivors(full_site_op, dead_site_op):
    trajectories = [run(full_site_op, 0, 10), run(dead_site_op, 0, 10)]
    estimate = fit_growth(trajectories)
    assert estimate.value == pytest.approx(math.log(2))
    assert estimate.count == 1


def test_extinct_replica_summary(dead_site_op):
    outcome = trajectory_growth(run(dead_site_op, 7, 10))
    assert outcome.seed == 7
    assert not outcome.survived
    assert outcome.rate is None
    assert outcome.extinction_time == 1
    assert outcome.cesaro_term == 0.0


def test_cesaro_of_the_open_lattice(full_site_op):
    outcome = trajectory_growth(run(full_site_op, 0, 10))
    assert cesaro([outcome], 10) == pytest.approx(math.log1p(2**10) / 10)
    assert cesaro([outcome], 0) == 0.0


def test_aggregate_rate_is_none_when_all_die(dead_site_op):
    outcomes = growth_replicas(dead_site_op, 10, 4, seed=1)
    assert aggregate_rate(outcomes) is None


def test_survival_and_growth_agree_on_nonrandom_kernels(full_site_op, dead_site_op):
    outcomes = growth_replicas(full_site_op, 20, 3, seed=1) + growth_replicas(dead_site_op, 20, 3, seed=1)
    assert survival_growth_agreement(outcomes).value == 0.0


@pytest.mark.slow
@pytest.mark.parametrize("m", [1, 2])
def test_fitted_rate_respects_the_growth_bound(weighted, seed, m):
    horizon, replicas = 80, 60
    outcomes = growth_replicas(weighted, horizon, replicas, seed)
    survival = proportion([o.survived for o in outcomes])
    report = c_delta(weighted, 0.4, m, horizon, replicas, seed, survival=survival)
    rate = aggregate_rate(outcomes)
    assert check_rate_bound(rate.value, report.c_delta_hat, 0.4, m).passed


@pytest.mark.slow
def test_most_survivors_respect_the_growth_bound(weighted, seed):
    horizon, replicas = 200, 60
    outcomes = growth_replicas(weighted, horizon, replicas, seed)
    survival = proportion([o.survived for o in outcomes])
    report = c_delta(weighted, 0.4, 1, horizon, replicas, seed, survival=survival)
    rates = [o.rate for o in outcomes if o.rate is not None]
    passed = [check_rate_bound(rate, report.c_delta_hat, 0.4).passed for rate in rates]
    assert sum(passed) >= 0.95 * len(passed)


@pytest.mark.slow
def test_product_kernel_bound_for_site_percolation(seed):
    model = ModelSpec.site_op(0.8)
    horizon, replicas = 150, 40
    outcomes = growth_replicas(model, horizon, replicas, seed)
    survival = proportion([o.survived for o in outcomes])
    report = c_delta(model, 1.0, 2, horizon, replicas, seed, survival=survival)
    assert report.heavy_exact
    assert report.c_delta_hat > 0
    assert check_rate_bound(aggregate_rate(outcomes).value, report.c_delta_hat, 1.0, 2).passed
