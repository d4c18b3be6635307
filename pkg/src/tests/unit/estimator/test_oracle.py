from math import comb

import pytest

from lingrowth.core.mass_field import MassMode
from lingrowth.estimator.oracle import MAX_PATH_LENGTH, brute_force_paths
from lingrowth.estimator.replicas import replica_seeds
from lingrowth.evolution.trajectory import run
from lingrowth.exceptions import NonBinaryKernelError, SizeGuardError
from lingrowth.kernels.models import ModelSpec


def test_open_lattice_counts_binomial_paths(full_site_op):
    trajectory = run(full_site_op, 0, 8)
    for x in range(-8, 9, 2):
        assert brute_force_paths(trajectory, 8, (x,)) == comb(8, (8 + x) // 2)
    assert brute_force_paths(trajectory, 8, (1,)) == 0


def test_weighted_kernels_are_rejected(weighted):
    with pytest.raises(NonBinaryKernelError):
        brute_force_paths(run(weighted, 0, 3), 3, (1,))


def test_path_length_is_guarded(full_site_op):
    with pytest.raises(SizeGuardError):
        brute_force_paths(run(full_site_op, 0, MAX_PATH_LENGTH + 1), MAX_PATH_LENGTH + 1, (1,))


def test_time_must_lie_in_the_trajectory(full_site_op):
    with pytest.raises(ValueError):
        brute_force_paths(run(full_site_op, 0, 3), 5, (1,))


def _duality_holds(model, seed, steps):
    trajectory = run(model, seed, steps, mode=MassMode.EXACT)
    for n in range(steps + 1):
        field_ = trajectory.fields[n]
        for x in range(-n, n + 1):
            assert field_.get((x,)) == brute_force_paths(trajectory, n, (x,))


@pytest.mark.parametrize("model", [ModelSpec.site_op(0.6), ModelSpec.bond_op(0.6)])
def test_mass_counts_open_paths(model, seed):
    for replica_seed in replica_seeds(seed, 3):
        _duality_holds(model, replica_seed, 8)


@pytest.mark.slow
@pytest.mark.parametrize("kind", ["site_op", "bond_op"])
@pytest.mark.parametrize("p", [0.3, 0.6, 0.9])
def test_mass_counts_open_paths_at_scale(kind, p, seed):
    model = getattr(ModelSpec, kind)(p)
    for replica_seed in replica_seeds(seed, 50):
        _duality_holds(model, replica_seed, 12)
