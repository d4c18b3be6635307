import numpy as np
import pytest

from lingrowth.kernels.models import ModelSpec
from lingrowth.kernels.samplers import product_slice, sample_slice

WINDOW = [(x,) for x in range(-6, 7)]


@pytest.mark.parametrize("seed", [0, 1, 99])
def test_full_site_percolation_opens_every_neighbour(full_site_op, seed):
    kernel = sample_slice(full_site_op, seed, 4, WINDOW)
    for (x,) in WINDOW:
        assert kernel.row((x,)) == {(x - 1,): 1.0, (x + 1,): 1.0}


def test_dead_site_percolation_is_zero(dead_site_op):
    kernel = sample_slice(dead_site_op, 5, 1, WINDOW)
    assert all(not kernel.row(x) for x in WINDOW)


def test_site_percolation_opens_whole_columns(seed):
    kernel = sample_slice(ModelSpec.site_op(0.5), seed, 2, [(x,) for x in range(-30, 31)])
    for y in range(-29, 30):
        assert kernel.entry((y - 1,), (y,)) == kernel.entry((y + 1,), (y,))


def test_slices_agree_across_windows(weighted, seed):
    small = sample_slice(weighted, seed, 7, [(0,), (1,)])
    large = sample_slice(weighted, seed, 7, WINDOW)
    for x in [(0,), (1,)]:
        assert small.row(x) == large.row(x)


def test_site_percolation_frequency(seed):
    model = ModelSpec.site_op(0.5)
    opened = [
        sample_slice(model, seed, step, [(0,)]).entry((0,), (1,)) == 1.0
        for step in range(1, 10001)
    ]
    assert abs(np.mean(opened) - 0.5) <= 3 * 0.005


def test_bond_percolation_frequency(seed):
    kernel = sample_slice(ModelSpec.bond_op(0.3), seed, 1, [(x,) for x in range(2000)])
    opened = sum(len(kernel.row((x,))) for x in range(2000)) / 4000
    assert abs(opened - 0.3) < 0.03


def test_dlse_rows_pick_one_direction_plus_self(seed):
    kernel = sample_slice(ModelSpec.bcpp_dlse(0.8, 0.6), seed, 3, WINDOW)
    for (x,) in WINDOW:
        row = kernel.row((x,))
        assert set(row) <= {(x - 1,), (x,), (x + 1,)}
        assert sum(1 for y in row if y != (x,)) <= 1
        assert all(value == 1.0 for value in row.values())


def test_coalescing_table_has_one_target_per_row(coalescing_walk, seed):
    kernel = sample_slice(coalescing_walk, seed, 1, WINDOW)
    for x in WINDOW:
        assert len(kernel.row(x)) == 1


def test_product_of_full_site_percolation_counts_paths(full_site_op):
    model = ModelSpec.product(full_site_op, 2)
    kernel = product_slice(model, 0, 1, [(0,)])
    assert kernel.row((0,)) == {(-2,): 1.0, (0,): 2.0, (2,): 1.0}


def test_product_of_one_step_is_the_base_slice(weighted, seed):
    product = product_slice(ModelSpec.product(weighted, 1), seed, 5, WINDOW)
    base = sample_slice(weighted, seed, 5, WINDOW)
    assert product.rows == base.rows


def test_product_blocks_reuse_the_base_steps(seed):
    base = ModelSpec.site_op(0.9)
    block = product_slice(ModelSpec.product(base, 2), seed, 2, [(0,)])
    first = sample_slice(base, seed, 3, [(0,)])
    middle = list(first.row((0,)))
    second = sample_slice(base, seed, 4, middle)
    expected = {}
    for y in middle:
        for z, value in second.row(y).items():
            expected[z] = expected.get(z, 0.0) + value
    assert block.row((0,)) == expected


def test_product_heavy_frequency_matches_enumeration(seed):
    p = 0.9
    model = ModelSpec.product(ModelSpec.site_op(p), 2)
    hits = sum(
        product_slice(model, seed, block, [(0,)]).entry((0,), (0,)) >= 2
        for block in range(1, 10001)
    )
    # both intermediate sites and the return site are open
    expected = p**3
    assert abs(hits / 10000 - expected) < 4 * np.sqrt(expected * (1 - expected) / 10000)
