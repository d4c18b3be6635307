import pytest

from lingrowth.core.mass_field import MassMode
from lingrowth.estimator.oracle import brute_force_paths
from lingrowth.evolution.environment import Environment
from lingrowth.evolution.restart import SupportChain, alive, reaches, restart
from lingrowth.evolution.trajectory import run
from lingrowth.kernels.models import ModelSpec
from tests.conftest import slice_of


def test_restart_from_the_origin_is_the_main_chain(weighted, seed):
    trajectory = run(weighted, seed, 30)
    assert restart(trajectory, 0, (0,)).fields == trajectory.fields


def test_full_fan_out_support_has_matching_parity(full_site_op):
    trajectory = run(full_site_op, 0, 12)
    handle = restart(trajectory, 4, (1,))
    for n in range(4, 13):
        expected = {(1 + k,) for k in range(-(n - 4), n - 4 + 1, 2)}
        assert handle.support_at(n) == expected


def test_restart_in_a_dead_environment(full_site_op):
    environment = Environment.from_slices(full_site_op, {1: slice_of(1, [0], {(0, 1): 1.0})})
    trajectory = run(full_site_op, 0, 3, environment=environment)
    assert restart(trajectory, 1, (1,)).field_at(2).is_empty()
    assert not alive(restart(trajectory, 1, (1,)), 2)
    assert alive(restart(trajectory, 1, (1,)), 1)


def test_reaches(full_site_op):
    trajectory = run(full_site_op, 0, 4)
    assert reaches(trajectory, (2, (5,)), (2, (5,)))
    assert reaches(trajectory, (0, (0,)), (3, (1,)))
    assert not reaches(trajectory, (0, (0,)), (3, (0,)))
    with pytest.raises(ValueError):
        reaches(trajectory, (3, (0,)), (1, (0,)))


def test_alive_in_trivial_environments(full_site_op, dead_site_op):
    assert alive(run(full_site_op, 0, 20), 20)
    dead = run(dead_site_op, 0, 5)
    assert alive(dead, 0)
    assert not alive(dead, 1)


def test_reaches_matches_path_counts(seed):
    trajectory = run(ModelSpec.site_op(0.6), seed, 8, mode=MassMode.EXACT)
    for n in range(9):
        for x in range(-n, n + 1):
            paths = brute_force_paths(trajectory, n, (x,))
            assert reaches(trajectory, (0, (0,)), (n, (x,))) is (paths > 0)


def test_support_chain_matches_boolean_sweep(seed):
    model = ModelSpec.site_op(0.55)
    trajectory = run(model, seed, 50)
    chain = SupportChain(trajectory.environment, 0, (0,), 50)
    for n in range(51):
        assert chain.support_at(n) == trajectory.support_at(n)
    assert alive(chain, 50) is (not trajectory.fields[-1].is_empty())


def test_raising_p_never_shrinks_the_support(seed):
    low = run(ModelSpec.site_op(0.5), seed, 40)
    high = run(ModelSpec.site_op(0.7), seed, 40)
    for n in range(41):
        assert low.support_at(n) <= high.support_at(n)
