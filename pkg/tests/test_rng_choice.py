"""Seedable source determinism, bounded-draw uniformity, set-bit choice."""

import random
from collections import Counter

import pytest
from scipy import stats

from latinsq.errors import ChoiceImpossible, InvalidBound
from latinsq.mask_set import SubsetMask, universe
from latinsq.rng_choice import RandomSource, choice

CHI2_ALPHA = 1e-3


def test_same_seed_same_stream():
    a = RandomSource(1234)
    b = RandomSource(1234)
    assert [a.next_below(100) for _ in range(1000)] == [b.next_below(100) for _ in range(1000)]


def test_different_seeds_diverge():
    a = [RandomSource(1).next_below(1 << 32) for _ in range(4)]
    b = [RandomSource(2).next_below(1 << 32) for _ in range(4)]
    assert a != b


def test_next_below_invalid_bound():
    src = RandomSource(0)
    with pytest.raises(InvalidBound):
        src.next_below(0)
    with pytest.raises(InvalidBound):
        src.next_below(-3)


def test_next_below_one_is_zero():
    src = RandomSource(99)
    assert all(src.next_below(1) == 0 for _ in range(100))


def test_next_below_range_and_uniformity():
    src = RandomSource(2024)
    draws = [src.next_below(6) for _ in range(10_000)]
    assert all(0 <= d < 6 for d in draws)
    counts = Counter(draws)
    assert set(counts) == set(range(6))  # every value appears
    _, p = stats.chisquare(list(counts.values()))
    assert p > CHI2_ALPHA


def test_seed_recorded_and_validated():
    assert RandomSource(42).seed == 42
    auto = RandomSource()
    assert 0 <= auto.seed < (1 << 64)
    assert RandomSource().seed != auto.seed  # fresh entropy each time
    with pytest.raises(ValueError):
        RandomSource(-1)
    with pytest.raises(ValueError):
        RandomSource(1 << 64)


def test_spawn_derives_seed_plus_index():
    base = RandomSource(100)
    assert base.spawn(0).seed == 100
    assert base.spawn(7).seed == 107
    wrap = RandomSource((1 << 64) - 1)
    assert wrap.spawn(1).seed == 0


def test_choice_forced_singleton():
    for seed in range(20):
        got = choice(SubsetMask(8, 12), RandomSource(seed))
        assert got == SubsetMask(8, 12)


def test_choice_empty_mask():
    with pytest.raises(ChoiceImpossible):
        choice(SubsetMask(0, 4), RandomSource(0))


def test_choice_two_bits_balanced():
    src = RandomSource(7)
    k = SubsetMask(0b1010, 4)
    counts = Counter(choice(k, src).bits for _ in range(10_000))
    assert set(counts) == {2, 8}
    _, p = stats.chisquare([counts[2], counts[8]])
    assert p > CHI2_ALPHA


def test_choice_is_deterministic():
    k = universe(9)
    a = RandomSource(55)
    b = RandomSource(55)
    assert [choice(k, a).bits for _ in range(500)] == [choice(k, b).bits for _ in range(500)]


def test_choice_singleton_submask_fuzz():
    # 10**5 draws over random nonempty masks at orders up to 12
    rng = random.Random(0)
    src = RandomSource(31337)
    for _ in range(100_000):
        n = rng.randint(1, 12)
        bits = rng.randint(1, (1 << n) - 1)
        got = choice(SubsetMask(bits, n), src)
        assert got.bits.bit_count() == 1
        assert got.bits & bits == got.bits


def test_choice_uniform_over_four_bits():
    src = RandomSource(11)
    k = SubsetMask(0b1111, 4)
    counts = Counter(choice(k, src).bits for _ in range(20_000))
    assert set(counts) == {1, 2, 4, 8}
    _, p = stats.chisquare(list(counts.values()))
    assert p > CHI2_ALPHA
