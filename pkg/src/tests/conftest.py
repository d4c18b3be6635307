"""Shared fixtures: small kernel laws, fixed seeds and output directories."""

import pytest

from lingrowth.core.kernel_slice import KernelSlice
from lingrowth.ctsim.kernel import CtKernel
from lingrowth.kernels.models import ROW, ModelSpec

SEED = 20240611


@pytest.fixture
def seed() -> int:
    return SEED


@pytest.fixture
def full_site_op() -> ModelSpec:
    return ModelSpec.site_op(1.0)


@pytest.fixture
def dead_site_op() -> ModelSpec:
    return ModelSpec.site_op(0.0)


@pytest.fixture
def weighted() -> ModelSpec:
    """The supercritical case1 model: each of the two column entries is 1.5 w.p. 0.7."""
    return ModelSpec.weighted(0.7, 1.5)


@pytest.fixture
def coalescing_walk() -> ModelSpec:
    return ModelSpec.table([(0.5, {(1,): 1.0}), (0.5, {(-1,): 1.0})], orientation=ROW)


@pytest.fixture
def ct_bernoulli() -> CtKernel:
    """K_o = 1 and K_{e1} = 1 w.p. 1/2."""
    return CtKernel.bernoulli({(0,): 1.0}, {(1,): (0.5, 1.0)})


@pytest.fixture
def ct_doubling() -> CtKernel:
    return CtKernel.deterministic({(0,): 2.0})


@pytest.fixture
def out_dir(tmp_path):
    return tmp_path / "out"


def slice_of(step: int, window, entries, range: int = 2) -> KernelSlice:
    """Build a slice from {(x, y): value} with 1-d integer coordinates."""
    return KernelSlice.from_entries(
        step,
        [(x,) for x in window],
        {((x,), (y,)): value for (x, y), value in entries.items()},
        range,
    )
