import math

import pytest

from lingrowth.estimator.bounds import (
    check_good_frequency,
    check_good_mass,
    check_nongrowth,
    check_path_bound,
    check_rate_bound,
)
from lingrowth.estimator.cdelta import c_delta
from lingrowth.estimator.growth import fit_growth
from lingrowth.estimator.replicas import replica_seeds
from lingrowth.evolution.trajectory import run
from lingrowth.pathfinder import trace_path
from lingrowth.pathfinder.gamma import preferred_direction
from lingrowth.pathfinder.trace import PathTrace, Rule

STEP = math.log1p(0.5)


def _trace(log_masses, good, percolates=True):
    steps = len(log_masses) - 1
    return PathTrace(
        start_site=(0,),
        heavy_site=(-1,),
        delta=0.5,
        gamma=[(-n,) for n in range(steps + 1)],
        rules=[Rule.HEAVY] * steps,
        t_back=[None] * steps,
        percolates=percolates,
        big_gamma=[(-n,) for n in range(steps + 1)] if percolates else [],
        big_gamma_log_mass=log_masses if percolates else [],
        good=good,
    )


def test_rate_bound():
    bound = 0.5 * math.log1p(0.4) / 2 - 0.05
    check = check_rate_bound(0.2, 0.5, 0.4, m=2)
    assert check.passed
    assert check.bound == pytest.approx(bound)
    assert not check_rate_bound(0.0, 0.5, 0.4).passed


def test_nongrowth():
    assert check_nongrowth(0.01).passed
    assert not check_nongrowth(0.1).passed
    assert check_nongrowth(0.1, tolerance=0.2).passed


def test_good_mass_accumulates_per_good_event():
    passing = _trace([0.0, STEP, STEP, 2 * STEP], [True, False, True])
    assert check_good_mass(passing).passed
    failing = _trace([0.0, STEP, STEP, 1.5 * STEP], [True, False, True])
    check = check_good_mass(failing)
    assert not check.passed
    assert check.statistic < 0


def test_path_bound():
    trace = _trace([0.0, STEP, 2 * STEP, 3 * STEP, 4 * STEP], [True] * 4)
    assert check_path_bound(trace, 1.0, 0.5).statistic == pytest.approx(STEP)
    assert check_path_bound(trace, 1.0, 0.5).passed
    undefined = check_path_bound(_trace([0.0, 0.0], [False], percolates=False), 1.0, 0.5)
    assert not undefined.passed


def test_path_bound_fails_when_gamma_stops_short():
    trace = _trace([0.0, STEP, 2 * STEP, 3 * STEP, 4 * STEP], [True] * 4)
    short = trace.model_copy(
        update={"big_gamma": trace.big_gamma[:3], "big_gamma_log_mass": trace.big_gamma_log_mass[:3]}
    )
    check = check_path_bound(short, 1.0, 0.5)
    assert not check.passed
    assert check.detail == "Gamma ends at 2 before the horizon 4"


def test_good_frequency():
    trace = _trace([0.0] * 5, [True, True, False, False])
    assert check_good_frequency(trace, 0.52).passed
    assert not check_good_frequency(trace, 0.7).passed


def test_coalescing_walk_conserves_mass(coalescing_walk):
    rate = fit_growth(run(coalescing_walk, 0, 200)).value
    assert rate == pytest.approx(0.0, abs=1e-12)
    assert check_nongrowth(rate).passed


@pytest.mark.slow
def test_coalescing_walk_does_not_grow_at_scale(coalescing_walk, seed):
    for replica_seed in replica_seeds(seed, 20):
        assert check_nongrowth(fit_growth(run(coalescing_walk, replica_seed, 1000)).value).passed


@pytest.mark.slow
def test_percolation_path_carries_the_bound(weighted, seed):
    horizon = 150
    report = c_delta(weighted, 0.4, 1, horizon=horizon, replicas=200, seed=seed + 1)
    checked = 0
    for offset in range(5):
        trajectory = run(weighted, seed + offset, horizon)
        trace = trace_path(trajectory, preferred_direction(weighted, 0.4), lookahead=horizon)
        if trace.percolates:
            checked += 1
            assert check_good_mass(trace).passed
            assert check_path_bound(trace, report.c_delta_hat, 0.4).passed
    assert checked > 0


@pytest.mark.slow
def test_survivors_carry_the_bound_at_scale(weighted, seed):
    horizon, lookahead = 500, 40
    heavy = preferred_direction(weighted, 0.4)
    report = c_delta(weighted, 0.4, 1, horizon=lookahead, replicas=2000, seed=seed + 1)
    rate_checks, path_checks = [], []
    for replica_seed in replica_seeds(seed, 40):
        trajectory = run(weighted, replica_seed, horizon)
        if not trajectory.support_at(horizon):
            continue
        rate_checks.append(check_rate_bound(fit_growth(trajectory).value, report.c_delta_hat, 0.4))
        trace = trace_path(trajectory, heavy, lookahead=lookahead)
        path_checks.append(check_path_bound(trace, report.c_delta_hat, 0.4))
    assert len(rate_checks) >= 20
    assert sum(check.passed for check in rate_checks) >= 0.95 * len(rate_checks)
    assert sum(check.passed for check in path_checks) >= 0.95 * len(path_checks)
    assert all(check.detail == f"n={horizon}" for check in path_checks)
