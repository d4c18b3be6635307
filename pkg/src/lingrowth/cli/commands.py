"""
The five subcommands. Each takes an ExperimentConfig, writes its files
through one OutputWriter and returns a CommandResult; exceptions are turned
into results by ``command_guard``.
"""

import math
from typing import Any, Dict, List

from loguru import logger

from lingrowth import __version__
from lingrowth.cli.config import ExperimentConfig
from lingrowth.cli.writers import OutputWriter
from lingrowth.config.constants import OutputFiles
from lingrowth.core.lattice import box_offsets, origin
from lingrowth.core.mass_field import MassField, MassMode
from lingrowth.ctsim.classify import ct_classify
from lingrowth.ctsim.discretize import replay_check
from lingrowth.ctsim.simulate import ct_run_y
from lingrowth.estimator.bounds import (
    check_good_frequency,
    check_good_mass,
    check_nongrowth,
    check_path_bound,
    check_rate_bound,
)
from lingrowth.estimator.cdelta import c_delta
from lingrowth.estimator.classify import classify
from lingrowth.estimator.growth import aggregate_rate, cesaro, survival_growth_agreement, trajectory_growth
from lingrowth.estimator.oracle import brute_force_paths
from lingrowth.estimator.replicas import map_replicas, mean, proportion, replica_seeds
from lingrowth.estimator.report import Verdict
from lingrowth.evolution.trajectory import run
from lingrowth.models.command_result import CommandResult, CommandStatus
from lingrowth.pathfinder import preferred_direction, trace_path
from lingrowth.pathfinder.trace import Rule
from lingrowth.utils.decorators import command_guard

command_logger = logger.bind(component="cli")


def _writer(config: ExperimentConfig) -> OutputWriter:
    return OutputWriter(config.out, config.digest(), __version__)


def _stamp() -> Dict[str, Any]:
    return {"version": __version__}


@command_guard()
def cmd_run(config: ExperimentConfig) -> CommandResult:
    """Trajectories of every replica, their snapshot CSV and a GrowthReport."""
    model = config.require_model()
    writer = _writer(config)

    def replica(seed: int):
        trajectory = run(model, seed, config.horizon, mode=config.mode)
        return trajectory_growth(trajectory, config.tail_fraction), list(trajectory.snapshot_rows())

    results = map_replicas(replica, config.seed, config.replicas, config.workers)
    outcomes = [outcome for outcome, _ in results]
    writer.write_csv(
        OutputFiles.TRAJECTORY,
        ({"replica": i, **row} for i, (_, rows) in enumerate(results) for row in rows),
        fieldnames=["replica", "n", "total_mass", "support_size", "log_mass"],
    )

    survival = proportion([o.survived for o in outcomes])
    rate = aggregate_rate(outcomes)
    report = c_delta(
        model,
        config.delta,
        config.m,
        config.horizon,
        config.replicas,
        config.seed,
        epsilon=config.epsilon,
        survival=survival,
    ).model_copy(
        update={
            "fitted_rate": rate.value if rate else None,
            "fitted_rate_stderr": rate.stderr if rate else None,
            "surviving_replicas": sum(o.survived for o in outcomes),
            "cesaro": cesaro(outcomes, config.horizon),
            "lookahead": config.lookahead,
            "config_hash": writer.digest,
            **_stamp(),
        }
    )
    checks = []
    if rate is not None:
        checks.append(check_rate_bound(rate.value, report.c_delta_hat, config.delta - config.epsilon, config.m))
        if report.c_delta_hat == 0:
            checks.append(check_nongrowth(rate.value))

    writer.write_csv(OutputFiles.REPORT_ROW, [report.csv_row()])
    writer.write_json(
        OutputFiles.SUMMARY,
        {
            "report": report.to_json(),
            "replicas": [o.model_dump(mode="json") for o in outcomes],
            "extinction_times": [o.extinction_time for o in outcomes],
            "survival_growth_disagreement": survival_growth_agreement(outcomes).model_dump(),
            "checks": [check.model_dump() for check in checks],
        },
    )
    return CommandResult(
        status=CommandStatus.SUCCESS,
        message=f"{model.label()}: {report.surviving_replicas}/{config.replicas} replicas survived",
        artifacts=writer.written,
        payload={
            "survival_hat": report.survival_hat,
            "fitted_rate": report.fitted_rate,
            "bound": report.bound,
        },
    )


@command_guard()
def cmd_path(config: ExperimentConfig) -> CommandResult:
    """gamma, Gamma and good events of every replica, with rule usage and good-event frequency."""
    model = config.require_model()
    writer = _writer(config)
    heavy = preferred_direction(model, config.delta, config.epsilon, config.seed)

    def replica(seed: int):
        trajectory = run(model, seed, config.horizon, mode=config.mode)
        return trace_path(trajectory, heavy, config.lookahead)

    traces = map_replicas(replica, config.seed, config.replicas, config.workers)
    writer.write_csv(
        OutputFiles.PATH_TRACE,
        ({"replica": i, **row} for i, trace in enumerate(traces) for row in trace.csv_rows()),
        fieldnames=[
            "replica", "n", "gamma_coords", "rule", "T_n", "good", "big_gamma_coords", "mass_at_big_gamma",
        ],
    )

    lookahead = traces[0].lookahead
    percolation = proportion([bool(trace.percolates) for trace in traces])
    report = c_delta(
        model,
        config.delta,
        1,
        lookahead or config.horizon,
        config.replicas,
        config.seed,
        epsilon=config.epsilon,
        survival=percolation,
    ).model_copy(update={"lookahead": lookahead, "config_hash": writer.digest, **_stamp()})

    histogram = {rule.value: 0 for rule in Rule}
    per_replica: List[Dict[str, Any]] = []
    for i, (seed, trace) in enumerate(zip(replica_seeds(config.seed, config.replicas), traces)):
        for rule, count in trace.rule_histogram().items():
            histogram[rule] += count
        checks = []
        if trace.percolates:
            checks = [
                check_good_mass(trace),
                check_good_frequency(trace, report.c_delta_hat),
                check_path_bound(trace, report.c_delta_hat, heavy.delta),
            ]
        per_replica.append(
            {
                "replica": i,
                "seed": seed,
                "percolates": trace.percolates,
                "truncated": trace.truncated,
                "rule_histogram": trace.rule_histogram(),
                "good_frequency": trace.good_frequency(),
                "checks": [check.model_dump() for check in checks],
            }
        )
    steps = sum(histogram.values())
    frequencies = [trace.good_frequency() for trace in traces if trace.percolates]
    good = mean(frequencies) if frequencies else None
    writer.write_json(
        OutputFiles.PATH_SUMMARY,
        {
            "report": report.to_json(),
            "heavy": heavy.model_dump(mode="json"),
            "rule_histogram": histogram,
            "rule_fractions": {rule: count / steps if steps else 0.0 for rule, count in histogram.items()},
            "good_frequency": good.model_dump() if good else None,
            "replicas": per_replica,
        },
    )
    return CommandResult(
        status=CommandStatus.SUCCESS,
        message=f"{model.label()}: traced {len(traces)} replicas, {sum(1 for t in traces if t.percolates)} percolating",
        artifacts=writer.written,
        payload={
            "rule_histogram": histogram,
            "good_frequency": good.value if good else None,
            "c_delta_hat": report.c_delta_hat,
        },
    )


@command_guard()
def cmd_classify(config: ExperimentConfig) -> CommandResult:
    """Trichotomy verdict over the delta grid; an inconclusive verdict exits with 3."""
    model = config.require_model()
    writer = _writer(config)
    result = classify(
        model, config.delta_grid, config.horizon, config.replicas, config.seed, config.workers
    ).model_copy(update={"config_hash": writer.digest, **_stamp()})
    writer.write_json(OutputFiles.CLASSIFICATION, result.to_json())
    status = CommandStatus.INCONCLUSIVE if result.verdict is Verdict.INCONCLUSIVE else CommandStatus.SUCCESS
    return CommandResult(
        status=status,
        message=f"{model.label()}: {result.verdict.value} ({result.reason})",
        artifacts=writer.written,
        payload={"verdict": result.verdict.value, "survival_hat": result.survival.value},
    )


@command_guard()
def cmd_ct(config: ExperimentConfig) -> CommandResult:
    """
    One continuous-time trajectory with its event log, the replay check
    against the discretized chain and the continuous-time classification.
    """
    kernel = config.require_ct_kernel()
    writer = _writer(config)
    seed = replica_seeds(config.seed, 1)[0]
    start = MassField.delta(origin(kernel.dimension), 0, config.mode)

    ct = ct_run_y(kernel, start, config.t_end, seed, mode=config.mode)
    writer.write_csv(
        OutputFiles.CT_TRAJECTORY,
        ct.snapshot_rows(),
        fieldnames=["n", "total_mass", "support_size", "log_mass"],
    )
    writer.write_csv(
        OutputFiles.CT_EVENTS,
        ct.event_rows(),
        fieldnames=["t", "site", "index", "k_sum", "k_nonzero", "noop"],
    )

    steps = int(math.floor(config.t_end))
    replay = replay_check(kernel, seed, start, steps) if steps >= 1 else None
    verdict = ct_classify(
        kernel, config.delta_grid, config.t_end, config.replicas, config.seed, mode=config.mode, workers=config.workers
    ).model_copy(update={"config_hash": writer.digest, **_stamp()})
    writer.write_json(
        OutputFiles.CT_CHECK,
        {
            "kernel_label": kernel.label(),
            "replay": replay.model_dump() if replay else None,
            "replay_passed": replay.passed if replay else None,
            "classification": verdict.model_dump(mode="json"),
        },
    )

    broken = replay is not None and replay.bit_exact_expected and not replay.passed
    return CommandResult(
        status=CommandStatus.NUMERICAL_GUARD if broken else CommandStatus.SUCCESS,
        message=(
            f"Replay mismatch at integer times {replay.mismatched_times}"
            if broken
            else f"{kernel.label()}: {verdict.verdict.value} ({verdict.reason})"
        ),
        artifacts=writer.written,
        payload={
            "events": len(ct.events),
            "replay_passed": replay.passed if replay else None,
            "verdict": verdict.verdict.value,
        },
    )


@command_guard()
def cmd_oracle(config: ExperimentConfig) -> CommandResult:
    """Compare exact masses M_{n,x} with brute-force path counts for n <= oracle_steps."""
    model = config.require_model()
    writer = _writer(config)
    steps = config.oracle_steps
    reach = model.range - 1

    def replica(seed: int):
        trajectory = run(model, seed, steps, mode=MassMode.EXACT)
        checked, mismatches = 0, []
        for n in range(steps + 1):
            field_ = trajectory.field_at(n)
            for x in box_offsets(model.dimension, n * reach):
                paths = brute_force_paths(trajectory, n, x)
                checked += 1
                if field_.get(x) != paths:
                    mismatches.append({"n": n, "site": list(x), "mass": str(field_.get(x)), "paths": paths})
        return checked, mismatches

    results = map_replicas(replica, config.seed, config.replicas, config.workers)
    mismatches = [
        {"replica": i, **mismatch} for i, (_, found) in enumerate(results) for mismatch in found
    ]
    checked = sum(count for count, _ in results)
    writer.write_json(
        OutputFiles.ORACLE,
        {
            "model_label": model.label(),
            "steps": steps,
            "replicas": config.replicas,
            "sites_checked": checked,
            "mismatches": mismatches,
        },
    )
    if mismatches:
        command_logger.error(f"{len(mismatches)} of {checked} masses differ from their path counts")
    return CommandResult(
        status=CommandStatus.NUMERICAL_GUARD if mismatches else CommandStatus.SUCCESS,
        message=f"{model.label()}: {checked - len(mismatches)}/{checked} masses equal their path counts",
        artifacts=writer.written,
        payload={"sites_checked": checked, "mismatches": len(mismatches)},
    )
