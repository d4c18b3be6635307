"""Monte Carlo estimators, the trichotomy classifier, oracles and bound checks."""

from lingrowth.estimator.bounds import (
    BoundCheck,
    check_good_frequency,
    check_good_mass,
    check_nongrowth,
    check_path_bound,
    check_rate_bound,
)
from lingrowth.estimator.cdelta import block_model, c_delta
from lingrowth.estimator.classify import Classification, classify
from lingrowth.estimator.growth import (
    ReplicaGrowth,
    aggregate_rate,
    cesaro,
    fit_growth,
    growth_replicas,
    replica_growth,
    survival_growth_agreement,
    trajectory_growth,
)
from lingrowth.estimator.oracle import brute_force_paths
from lingrowth.estimator.replicas import map_replicas, replica_seeds
from lingrowth.estimator.report import Estimate, GrowthReport, Verdict
from lingrowth.estimator.survival import survival_prob, survival_sweep

__all__ = [
    "BoundCheck",
    "Classification",
    "Estimate",
    "GrowthReport",
    "ReplicaGrowth",
    "Verdict",
    "aggregate_rate",
    "block_model",
    "brute_force_paths",
    "c_delta",
    "cesaro",
    "check_good_frequency",
    "check_good_mass",
    "check_nongrowth",
    "check_path_bound",
    "check_rate_bound",
    "classify",
    "fit_growth",
    "growth_replicas",
    "map_replicas",
    "replica_growth",
    "replica_seeds",
    "survival_growth_agreement",
    "survival_prob",
    "survival_sweep",
    "trajectory_growth",
]
