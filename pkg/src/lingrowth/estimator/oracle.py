"""
Exhaustive open-path counting, the oracle for the mass/path duality of
binary kernels.
"""

from loguru import logger

from lingrowth.core.lattice import Site, linf, origin, sub
from lingrowth.evolution.trajectory import Trajectory
from lingrowth.exceptions import NonBinaryKernelError, SizeGuardError
from lingrowth.kernels.conditions import is_binary

oracle_logger = logger.bind(component="estimator")

MAX_PATH_LENGTH = 14


def brute_force_paths(trajectory: Trajectory, n: int, x: Site) -> int:
    """
    Number of open paths (0, o) -> (n, x) in the realized environment, by
    depth-first search over every path.

    Raises:
        NonBinaryKernelError: the model or a visited entry is not 0/1
        SizeGuardError: n exceeds the path-length guard
    """
    model = trajectory.model
    if not is_binary(model):
        msg = f"Path counting needs a binary kernel, got {model.label()}"
        oracle_logger.error(msg)
        raise NonBinaryKernelError(msg)
    if n > MAX_PATH_LENGTH:
        msg = f"Path length {n} exceeds the oracle guard {MAX_PATH_LENGTH}"
        oracle_logger.error(msg)
        raise SizeGuardError(msg)
    if not 0 <= n <= trajectory.horizon:
        msg = f"Time {n} outside of [0, {trajectory.horizon}]"
        oracle_logger.error(msg)
        raise ValueError(msg)

    environment = trajectory.environment
    reach = model.range - 1

    def count(k: int, site: Site) -> int:
        if k == n:
            return int(site == x)
        if linf(sub(x, site)) > (n - k) * reach:
            return 0
        total = 0
        for target, value in environment.row(k + 1, site).items():
            if value != 1:
                msg = f"Entry {value} at step {k + 1} is not binary"
                oracle_logger.error(msg)
                raise NonBinaryKernelError(msg)
            total += count(k + 1, target)
        return total

    return count(0, origin(model.dimension))
