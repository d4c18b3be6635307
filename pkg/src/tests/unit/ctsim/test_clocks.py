import numpy as np
import pytest
from scipy.stats import kstest

from lingrowth.ctsim.clocks import ClockBank, clock_gaps, draw_jumps


def test_gaps_are_keyed_by_index(seed):
    gaps = clock_gaps(seed, (0,), 0, 10)
    assert np.array_equal(gaps[5:], clock_gaps(seed, (0,), 5, 5))
    assert not np.array_equal(gaps, clock_gaps(seed, (1,), 0, 10))
    assert np.all(gaps > 0)


def test_gaps_are_mean_one_exponentials(seed):
    gaps = clock_gaps(seed, (3,), 0, 20000)
    assert gaps.mean() == pytest.approx(1.0, abs=4 / np.sqrt(20000))
    assert kstest(gaps, "expon").pvalue > 1e-3


def test_next_event_walks_the_clock(seed):
    bank = ClockBank(seed)
    first, index = bank.next_event((0,), 0.0)
    assert index == 0
    second, index = bank.next_event((0,), first)
    assert index == 1 and second > first
    assert bank.events_between((0,), 0.0, second) == 2
    assert bank.events_between((0,), first, second) == 1


def test_event_counts_are_poisson(seed):
    count = ClockBank(seed).events_between((2,), 0.0, 1000.0)
    assert abs(count - 1000) < 4 * np.sqrt(1000)


def test_banks_agree_whatever_the_query_order(seed):
    forward, backward = ClockBank(seed), ClockBank(seed)
    backward.next_event((0,), 50.0)
    assert forward.next_event((0,), 10.0) == backward.next_event((0,), 10.0)


def test_jumps(seed, ct_bernoulli, ct_doubling):
    assert draw_jumps(ct_doubling, seed, (0,), 7) == {(0,): 2.0}
    assert draw_jumps(ct_bernoulli, seed, (4,), 3) == draw_jumps(ct_bernoulli, seed, (4,), 3)
    hits = sum((1,) in draw_jumps(ct_bernoulli, seed, (0,), i) for i in range(4000))
    assert hits / 4000 == pytest.approx(0.5, abs=4 * 0.5 / np.sqrt(4000))
