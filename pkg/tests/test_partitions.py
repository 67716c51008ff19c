from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from framed_moduli import Box, Partition, arm, enumerate_partitions, leg


def brute_force_partitions(n):
    """Independent oracle: filter weakly decreasing tuples out of all compositions."""

    def compositions(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first, *rest)

    return {c for c in compositions(n) if all(a >= b for a, b in zip(c, c[1:]))}


partitions_strategy = st.builds(
    lambda parts: Partition(sorted(parts, reverse=True)),
    st.lists(st.integers(1, 9), max_size=7),
)


class TestConstruction:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition([1, 2])

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition([2, 0])

    def test_empty_partition(self):
        empty = Partition()
        assert empty.size == 0
        assert empty.parts == ()
        assert empty.num_columns() == 0
        assert empty.column_multiplicities() == {}

    def test_equality_and_hash(self):
        assert Partition([2, 1]) == Partition((2, 1))
        assert hash(Partition([2, 1])) == hash(Partition([2, 1]))
        assert Partition([2]) != Partition([1, 1])


class TestEnumeration:
    def test_zero(self):
        assert enumerate_partitions(0) == [Partition()]

    def test_one(self):
        assert enumerate_partitions(1) == [Partition([1])]

    def test_four_against_brute_force(self):
        got = enumerate_partitions(4)
        assert len(got) == 5
        assert {p.parts for p in got} == brute_force_partitions(4)

    @pytest.mark.parametrize("n", range(9))
    def test_matches_brute_force(self, n):
        got = [p.parts for p in enumerate_partitions(n)]
        assert set(got) == brute_force_partitions(n)
        assert len(got) == len(set(got))

    def test_lexicographically_decreasing_order(self):
        got = [p.parts for p in enumerate_partitions(6)]
        assert got == sorted(got, reverse=True)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            enumerate_partitions(-1)

    def test_deterministic(self):
        assert enumerate_partitions(7) == enumerate_partitions(7)


class TestArmLeg:
    def test_arm_examples(self):
        lam = Partition([2, 1])
        assert arm(lam, Box(1, 1)) == 1
        assert arm(lam, Box(1, 2)) == 0
        assert arm(Partition([3]), Box(2, 1)) == 0

    def test_arm_outside_is_error(self):
        with pytest.raises(ValueError):
            arm(Partition([2, 1]), Box(2, 2))
        with pytest.raises(ValueError):
            arm(Partition(), Box(1, 1))

    def test_leg_examples(self):
        lam = Partition([2, 1])
        assert leg(lam, Box(1, 1)) == 1
        assert leg(lam, Box(1, 2)) == 0
        assert leg(Partition(), Box(1, 1)) == -1

    def test_leg_rejects_bad_indices(self):
        with pytest.raises(ValueError):
            leg(Partition([1]), Box(0, 1))


class TestColumnStatistics:
    def test_num_columns(self):
        assert Partition([3, 1]).num_columns() == 3
        assert Partition([1, 1, 1]).num_columns() == 1

    def test_column_multiplicities(self):
        assert Partition([3, 1]).column_multiplicities() == {1: 2, 2: 1}
        assert Partition([2]).column_multiplicities() == {1: 2}

    def test_columns_longer_than(self):
        lam = Partition([3, 1])
        assert lam.columns_longer_than(1) == 1
        assert lam.columns_longer_than(Fraction(1, 2)) == 3
        assert Partition().columns_longer_than(-5) == 0

    def test_boxes_column_major(self):
        assert list(Partition([2, 1]).boxes()) == [Box(1, 1), Box(1, 2), Box(2, 1)]


class TestProperties:
    @given(partitions_strategy)
    def test_conjugate_involution(self, lam):
        assert lam.conjugate().conjugate() == lam

    @given(partitions_strategy)
    def test_conjugation_exchanges_arm_and_leg(self, lam):
        conj = lam.conjugate()
        for i, j in lam.boxes():
            assert arm(lam, Box(i, j)) == leg(conj, Box(j, i))
            assert leg(lam, Box(i, j)) == arm(conj, Box(j, i))

    @given(partitions_strategy)
    def test_arm_and_leg_nonnegative_inside(self, lam):
        for box in lam.boxes():
            assert arm(lam, box) >= 0
            assert leg(lam, box) >= 0

    @given(partitions_strategy)
    def test_multiplicities_sum_to_columns(self, lam):
        assert sum(lam.column_multiplicities().values()) == lam.num_columns()

    @given(partitions_strategy)
    def test_column_lengths_sum_to_size(self, lam):
        total = sum(lam.column_length(i) for i in range(1, lam.num_columns() + 1))
        assert total == lam.size

    @given(partitions_strategy)
    def test_armless_boxes_count_columns(self, lam):
        zero_arms = sum(1 for box in lam.boxes() if arm(lam, box) == 0)
        assert zero_arms == lam.num_columns()

    def test_json_roundtrip(self):
        lam = Partition([3, 1])
        assert lam.as_json() == [3, 1]
        assert Partition(lam.as_json()) == lam
        assert Partition().as_json() == []
