import math
from fractions import Fraction

import pytest

from lingrowth.core.mass_field import (
    MassField,
    MassMode,
    apply_kernel,
    log_total_mass,
    scale_add,
    total_mass,
)
from lingrowth.exceptions import MassOverflowError, WindowTooSmallError
from tests.conftest import slice_of


def test_identity_kernel_keeps_the_field():
    field_ = MassField.delta((0,))
    kernel = slice_of(1, [0], {(0, 0): 1.0})
    assert apply_kernel(field_, kernel).entries == {(0,): 1.0}


def test_one_step_fan_out():
    kernel = slice_of(1, [0], {(0, -1): 1.0, (0, 1): 1.0})
    result = apply_kernel(MassField.delta((0,)), kernel)
    assert result.entries == {(-1,): 1.0, (1,): 1.0}
    assert result.time_index == 1


def test_hand_sum():
    field_ = MassField({(0,): 2.0, (1,): 1.0})
    kernel = slice_of(1, [0, 1], {(0, 1): 1.5, (1, 1): 1.0})
    assert apply_kernel(field_, kernel).entries == {(1,): 4.0}


def test_modes_agree_on_the_hand_sum():
    kernel = slice_of(1, [0, 1], {(0, 1): 1.5, (1, 1): 1.0})
    exact = apply_kernel(MassField({(0,): 2, (1,): 1}, mode=MassMode.EXACT), kernel)
    assert exact.entries == {(1,): 4}
    logged = apply_kernel(
        MassField({(0,): math.log(2.0), (1,): 0.0}, mode=MassMode.LOG), kernel
    )
    assert logged.entries[(1,)] == pytest.approx(math.log(4.0), rel=1e-12)


def test_exact_mode_keeps_fractions():
    kernel = slice_of(1, [0], {(0, 1): 1.5})
    result = apply_kernel(MassField({(0,): 1}, mode=MassMode.EXACT), kernel)
    assert result.entries == {(1,): Fraction(3, 2)}


def test_linearity_in_exact_arithmetic():
    kernel = slice_of(1, [0, 1, 2], {(0, 1): 1.5, (1, 1): 1.0, (1, 2): 3.0, (2, 3): 1.0})
    first = MassField({(0,): 1, (1,): 2}, mode=MassMode.EXACT)
    second = MassField({(1,): 5, (2,): 1}, mode=MassMode.EXACT)
    combined = scale_add([(3, first), (2, second)], 0)
    lhs = apply_kernel(combined, kernel)
    rhs = scale_add([(3, apply_kernel(first, kernel)), (2, apply_kernel(second, kernel))], 1)
    assert lhs.entries == rhs.entries


def test_step_and_window_are_checked():
    field_ = MassField.delta((0,))
    with pytest.raises(ValueError):
        apply_kernel(field_, slice_of(2, [0], {}))
    with pytest.raises(WindowTooSmallError):
        apply_kernel(MassField({(0,): 1.0, (5,): 1.0}), slice_of(1, [0], {}))


def test_float_overflow_trips_the_guard():
    field_ = MassField({(0,): 1e300})
    with pytest.raises(MassOverflowError, match="--log-mass"):
        apply_kernel(field_, slice_of(1, [0], {(0, 0): 2.0}))


@pytest.mark.parametrize(
    "entries, expected",
    [({}, 0), ({(0,): 1.0}, 1.0), ({(-1,): 1.0, (1,): 1.0, (0,): 2.5}, 4.5)],
)
def test_total_mass(entries, expected):
    assert total_mass(MassField(entries)) == expected


def test_log_total_mass():
    assert log_total_mass(MassField({})) == -math.inf
    logged = MassField({(0,): math.log(3.0), (1,): math.log(5.0)}, mode=MassMode.LOG)
    assert log_total_mass(logged) == pytest.approx(math.log(8.0))
    assert MassField({}, mode=MassMode.LOG).get((0,)) == -math.inf


def test_json_form_keeps_fractions():
    field_ = MassField({(0,): Fraction(3, 2), (2,): 4}, 3, MassMode.EXACT)
    payload = field_.to_json()
    assert payload["entries"] == [[[0], "3/2"], [[2], 4]]
    assert MassField.from_json(payload) == field_


def test_negative_time_index_is_rejected():
    with pytest.raises(ValueError):
        MassField({}, -1)


@pytest.mark.parametrize(
    "entries, mode",
    [
        ({(0,): 0.5}, MassMode.FLOAT),
        ({(0,): 0}, MassMode.EXACT),
        ({(0,): Fraction(1, 2)}, MassMode.EXACT),
        ({(0,): -0.1}, MassMode.LOG),
        ({(0,): math.nan}, MassMode.FLOAT),
    ],
)
def test_masses_below_one_are_rejected(entries, mode):
    with pytest.raises(ValueError, match=">= 1"):
        MassField(entries, mode=mode)


def test_scale_add_cannot_shrink_masses_below_one():
    field_ = MassField({(0,): 1, (1,): 4}, mode=MassMode.EXACT)
    assert scale_add([(Fraction(1, 4), MassField({(1,): 4}, mode=MassMode.EXACT))], 0).entries == {(1,): 1}
    with pytest.raises(ValueError):
        scale_add([(Fraction(1, 4), field_)], 0)
