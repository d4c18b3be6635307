from lingrowth.estimator.survival import survival_prob, survival_sweep
from lingrowth.kernels.models import ModelSpec


def test_open_lattice_always_survives(full_site_op):
    estimate = survival_prob(full_site_op, horizon=20, replicas=5, seed=0)
    assert estimate.value == 1.0
    assert estimate.stderr == 0.0


def test_dead_lattice_never_survives(dead_site_op):
    assert survival_prob(dead_site_op, horizon=5, replicas=5, seed=0).value == 0.0


def test_sweep_reports_the_support_size(full_site_op):
    assert survival_sweep(full_site_op, 0, 12) == (True, 13)


def test_survival_is_monotone_in_the_opening_probability(seed):
    low = survival_prob(ModelSpec.site_op(0.6), horizon=40, replicas=50, seed=seed)
    high = survival_prob(ModelSpec.site_op(0.8), horizon=40, replicas=50, seed=seed)
    assert low.value <= high.value
