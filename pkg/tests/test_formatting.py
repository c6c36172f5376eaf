import random
import re

import pytest
from hypothesis import given, strategies as st

from abjad import OutOfRange, group_classes, read_classes, verbalize_rl
from abjad.formatting import multiplier_name


_MULTIPLIERS = {"thousand": 1000, "million": 1_000_000}


def reverse_reading(text: str) -> int:
    """Independent parser for verbalize_rl output.

    A class ends at its multiplier words or at ";".  Before the first
    multiplier the units class and the next class are told apart by the
    decimal place of each part, which must strictly rise within a class.
    """
    total = 0
    for segment in text.split(";"):
        pending: list[int] = []
        for item in segment.split(" and "):
            words = item.split()
            value, mult = int(words[0]), words[1:]
            if pending and len(str(value)) <= len(str(pending[-1])):
                total += sum(pending)  # place stopped rising: units class closed
                pending = []
            pending.append(value)
            if mult:
                factor = 1
                for w in mult:
                    factor *= _MULTIPLIERS[w]
                total += sum(pending) * factor
                pending = []
        total += sum(pending)
    return total


def test_group_classes():
    assert group_classes(12457892) == "12 457 892"
    assert group_classes(0) == "0"
    assert group_classes(1000) == "1 000"
    with pytest.raises(OutOfRange):
        group_classes(-1)


@given(st.integers(0, 10**30))
def test_group_strips_to_decimal(n):
    assert group_classes(n).replace(" ", "") == str(n)


def test_verbalize():
    assert verbalize_rl(12457892) == "2 and 90 and 800 and 7 and 50 and 400 thousand and 2 and 10 million"
    assert verbalize_rl(7) == "7"
    assert verbalize_rl(1000000) == "1 million"
    assert verbalize_rl(10**9) == "1 thousand million"
    assert verbalize_rl(10**12 + 5) == "5 and 1 thousand thousand million"
    assert verbalize_rl(10**12 + 500) == "500 and 1 thousand thousand million"
    assert verbalize_rl(10001) == "1; 10 thousand"
    assert verbalize_rl(11000) == "1 and 10 thousand"
    assert verbalize_rl(5007) == "7 and 5 thousand"
    with pytest.raises(OutOfRange):
        verbalize_rl(0)


def test_multiplier_names():
    assert [multiplier_name(k) for k in range(5)] == [
        "", "thousand", "million", "thousand million", "thousand thousand million",
    ]


def test_reverse_oracle_sampled():
    rng = random.Random(1)
    for _ in range(2000):
        n = rng.randint(1, 10**6)
        assert reverse_reading(verbalize_rl(n)) == n


@given(st.integers(1, 10**18))
def test_reverse_oracle_property(n):
    assert reverse_reading(verbalize_rl(n)) == n


@given(st.integers(1, 10**12))
def test_class_parts_ascend(n):
    for reading in read_classes(n):
        values = [v for v, _ in reading.parts]
        assert values == sorted(values) and len(set(values)) == len(values)
        assert 1 <= len(values) <= 3
