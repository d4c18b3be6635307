"""
The open path Gamma, spliced from the points of gamma that pass the
percolation proxy.
"""

from typing import List, Tuple

from loguru import logger

from lingrowth.core.lattice import SITE_ORDER, Site
from lingrowth.core.mass_field import MassField
from lingrowth.evolution.environment import Environment
from lingrowth.evolution.restart import SupportChain, restart
from lingrowth.evolution.trajectory import Trajectory
from lingrowth.exceptions import NoPercolationStartError
from lingrowth.pathfinder.proxy import PercProxy
from lingrowth.pathfinder.trace import PathTrace

big_gamma_logger = logger.bind(component="pathfinder")


def _bridge(environment: Environment, a: int, x: Site, b: int, targets: frozenset) -> List[Site]:
    """
    Site-order-first open path from (a, x) to one of ``targets`` at time b.

    Every point on the returned path reaches the targets.
    """
    forward = [frozenset((x,))]
    for k in range(a + 1, b + 1):
        forward.append(environment.successors(k, forward[-1]))
    backward = [frozenset()] * len(forward)
    backward[-1] = forward[-1] & targets
    for k in range(b - 1, a - 1, -1):
        later = backward[k + 1 - a]
        backward[k - a] = frozenset(
            y for y in forward[k - a] if not environment.successors(k + 1, (y,)).isdisjoint(later)
        )
    path = [x]
    for k in range(a + 1, b + 1):
        step = environment.successors(k, (path[-1],)) & backward[k - a]
        path.append(SITE_ORDER.min(step))
    return path


def _continuation(environment: Environment, a: int, x: Site, horizon: int) -> Tuple[List[Site], bool]:
    """Open path from (a, x) ending in the chain's support at its last nonempty time."""
    chain = SupportChain(environment, a, x, horizon)
    end = a
    while end < horizon and chain.alive_until(end + 1):
        end += 1
    return _bridge(environment, a, x, end, chain.support_at(end)), end == horizon


def _mass_source(trace: PathTrace, trajectory: Trajectory):
    start = trajectory.fields[0]
    if trace.start_time == 0 and start == MassField.delta(trace.start_site, 0, start.mode):
        return trajectory
    return restart(trajectory, trace.start_time, trace.start_site)


def build_big_gamma(trace: PathTrace, trajectory: Trajectory, proxy: PercProxy) -> PathTrace:
    """
    Attach tau and Gamma to a gamma trace.

    tau collects the proxy points of gamma, each reachable from the previous
    one. When the restart chain of the latest tau dies, that tau is dropped
    and the search resumes from the latest earlier tau whose chain is still
    alive, so Gamma reaches the horizon whenever the process started at the
    first point does. Gamma agrees with gamma on tau and follows the
    site-order-first open connection in between. Past the last tau, Gamma
    follows the first open continuation that survives as long as possible.

    Raises:
        NoPercolationStartError: the starting point fails the proxy
    """
    environment = trajectory.environment
    m0 = trace.start_time
    end = trace.end_time
    proxy.warm((m0 + i, site) for i, site in enumerate(trace.gamma))
    if not proxy.verdict(m0, trace.start_site):
        msg = f"({m0}, {trace.start_site}) fails the percolation proxy with lookahead {proxy.lookahead}"
        big_gamma_logger.info(msg)
        raise NoPercolationStartError(msg)

    tau = [m0]
    chains = [SupportChain(environment, m0, trace.start_site, trajectory.horizon)]
    for n in range(m0 + 1, end + 1):
        # Back off to the latest tau whose restart chain still lives at n
        while len(chains) > 1 and not chains[-1].alive_until(n):
            chains.pop()
            dropped = tau.pop()
            big_gamma_logger.debug(f"Chain of tau={dropped} dies at {n}; re-anchoring on tau={tau[-1]}")
        if not chains[-1].alive_until(n):
            break
        site = trace.gamma_at(n)
        if site in chains[-1].support_at(n) and proxy.verdict(n, site):
            tau.append(n)
            chains.append(SupportChain(environment, n, site, trajectory.horizon))

    big_gamma = [trace.start_site]
    for a, b in zip(tau, tau[1:]):
        big_gamma.extend(
            _bridge(environment, a, trace.gamma_at(a), b, frozenset((trace.gamma_at(b),)))[1:]
        )
    complete = True
    if tau[-1] < end:
        tail, complete = _continuation(environment, tau[-1], trace.gamma_at(tau[-1]), end)
        big_gamma.extend(tail[1:])
        if not complete:
            big_gamma_logger.warning(
                f"Gamma dies at time {m0 + len(big_gamma) - 1} before the horizon {end}; "
                "the process started at the first proxy point dies out"
            )

    source = _mass_source(trace, trajectory)
    log_mass = [
        source.field_at(m0 + i).log_mass_at(site) for i, site in enumerate(big_gamma)
    ]
    return trace.model_copy(
        update={
            "lookahead": proxy.lookahead,
            "percolates": True,
            "tau": tau,
            "big_gamma": big_gamma,
            "big_gamma_log_mass": log_mass,
            "truncated": proxy.truncated or not complete,
        }
    )
