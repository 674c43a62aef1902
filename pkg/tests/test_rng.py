import pytest
from hypothesis import given
from hypothesis import strategies as st

from tests.strategies import seeds
from workbench.rng import SplitMix64


def test_reference_output():
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_same_seed_same_stream():
    a, b = SplitMix64(1234), SplitMix64(1234)
    assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]


def test_below_rejects_empty_range():
    with pytest.raises(ValueError):
        SplitMix64(1).below(0)


@given(seeds, st.integers(1, 1000))
def test_below_in_range(seed, bound):
    assert 0 <= SplitMix64(seed).below(bound) < bound


@given(seeds, st.integers(-5, 5), st.integers(0, 5))
def test_between_inclusive(seed, low, width):
    assert low <= SplitMix64(seed).between(low, low + width) <= low + width


@given(seeds, st.lists(st.integers(), max_size=10))
def test_shuffled_is_a_permutation(seed, items):
    rng = SplitMix64(seed)
    assert sorted(rng.shuffled(items)) == sorted(items)
    assert rng.choice(items or [7]) in (items or [7])
