import itertools
import math
from fractions import Fraction

import pytest

from jmshuffle.errors import CapacityError
from jmshuffle.partitions import (
    Partition,
    SkewShape,
    contains,
    count_partitions,
    diag_index,
    dim_skew,
    dim_syt,
    dim_upper_bound,
    dominates,
    enumerate_partitions,
    enumerate_subpartitions,
    hardy_ramanujan_estimate,
    skew_dim_bound_check,
)
from jmshuffle.tableaux import enumerate_syt


def brute_skew_count(outer, inner):
    """Independent oracle: enumerate all standard fillings of the skew shape."""
    cells = [
        (i, j)
        for i, row in enumerate(outer)
        for j in range(row)
        if j >= (inner[i] if i < len(inner) else 0)
    ]
    count = 0
    for perm in itertools.permutations(range(1, len(cells) + 1)):
        filling = dict(zip(cells, perm))
        if all(
            (cell[0], cell[1] + 1) not in filling or filling[(cell[0], cell[1] + 1)] > v
            for cell, v in filling.items()
        ) and all(
            (cell[0] + 1, cell[1]) not in filling or filling[(cell[0] + 1, cell[1])] > v
            for cell, v in filling.items()
        ):
            count += 1
    return count


class TestPartitionType:
    def test_rejects_increasing_parts(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_negative_parts(self):
        with pytest.raises(ValueError):
            Partition((3, -1))

    def test_trailing_zeros_trimmed(self):
        assert Partition((3, 1, 0, 0)) == Partition((3, 1))
        assert Partition((0,)) == Partition(())

    def test_empty_partition(self):
        empty = Partition(())
        assert empty.n == 0 and empty.height == 0 and empty.width == 0

    def test_indexing_pads_with_zero(self):
        p = Partition((4, 2))
        assert p[0] == 4 and p[1] == 2 and p[5] == 0

    def test_transpose_involution(self):
        for n in range(0, 9):
            for p in enumerate_partitions(n):
                assert p.transpose().transpose() == p


class TestEnumeration:
    def test_zero_has_single_empty_partition(self):
        assert enumerate_partitions(0) == [Partition(())]

    def test_reverse_lexicographic_order_n4(self):
        got = [p.parts for p in enumerate_partitions(4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    @pytest.mark.parametrize("n", range(0, 26))
    def test_length_matches_count(self, n):
        assert len(enumerate_partitions(n)) == count_partitions(n)

    def test_limit_refused(self):
        with pytest.raises(CapacityError):
            enumerate_partitions(201)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            enumerate_partitions(-1)


class TestCounting:
    def test_small_values(self):
        assert count_partitions(0) == 1
        assert count_partitions(4) == 5

    def test_p100(self):
        assert count_partitions(100) == 190569292

    def test_hardy_ramanujan_at_1(self):
        assert hardy_ramanujan_estimate(1) == pytest.approx(
            math.exp(math.pi * math.sqrt(2.0 / 3.0)) / (4.0 * math.sqrt(3.0))
        )

    def test_hardy_ramanujan_window_and_trend(self):
        ratios = [count_partitions(n) / hardy_ramanujan_estimate(n) for n in range(50, 501, 50)]
        assert all(0.8 < r < 1.0 for r in ratios)
        assert all(a < b for a, b in zip(ratios, ratios[1:]))

    def test_ratio_closer_at_10000_than_100(self):
        r100 = count_partitions(100) / hardy_ramanujan_estimate(100)
        r10000 = count_partitions(10000) / hardy_ramanujan_estimate(10000)
        assert abs(1 - r10000) < abs(1 - r100)


class TestDominance:
    def test_paper_example(self):
        assert dominates(Partition((4, 4)), Partition((4, 3, 1)))

    def test_reflexive(self):
        p = Partition((3, 2, 1))
        assert dominates(p, p)

    def test_prefix_failure(self):
        assert not dominates(Partition((3, 3)), Partition((4, 2)))

    def test_mismatched_sizes_rejected(self):
        with pytest.raises(ValueError):
            dominates(Partition((2,)), Partition((3,)))

    def test_partial_order_up_to_9(self):
        for n in range(1, 10):
            ps = enumerate_partitions(n)
            for a in ps:
                assert dominates(a, a)
                for b in ps:
                    if dominates(a, b) and dominates(b, a):
                        assert a == b
                    for c in ps:
                        if dominates(a, b) and dominates(b, c):
                            assert dominates(a, c)


class TestDiagramStatistics:
    def test_diag_index_example(self):
        assert diag_index(Partition((4, 3, 1))) == 4

    @pytest.mark.parametrize("n", range(1, 10))
    def test_single_row_and_column(self, n):
        assert diag_index(Partition((n,))) == n * (n - 1) // 2
        assert diag_index(Partition((1,) * n)) == -n * (n - 1) // 2

    def test_transpose_negates(self):
        for n in range(0, 9):
            for p in enumerate_partitions(n):
                assert diag_index(p.transpose()) == -diag_index(p)

    def test_contains(self):
        assert contains(Partition((4, 3, 2)), Partition((2, 1)))
        p = Partition((3, 1))
        assert contains(p, p)
        assert not contains(Partition((3, 3)), Partition((4,)))


class TestSubpartitions:
    def test_example(self):
        got = {q.parts for q in enumerate_subpartitions(Partition((2, 1)), 2)}
        assert got == {(2,), (1, 1)}

    def test_full_and_empty(self):
        p = Partition((3, 2))
        assert enumerate_subpartitions(p, 5) == [p]
        assert enumerate_subpartitions(p, 0) == [Partition(())]

    def test_size_out_of_range(self):
        with pytest.raises(ValueError):
            enumerate_subpartitions(Partition((2,)), 3)

    def test_matches_filter_of_all_partitions(self):
        for n in range(1, 9):
            for p in enumerate_partitions(n):
                for size in range(0, n + 1):
                    got = {q.parts for q in enumerate_subpartitions(p, size)}
                    want = {q.parts for q in enumerate_partitions(size) if p.contains(q)}
                    assert got == want


class TestDimensions:
    def test_known_values(self):
        assert dim_syt(Partition((4, 3, 1))) == 70
        assert dim_syt(Partition(())) == 1
        for n in range(1, 9):
            assert dim_syt(Partition((n,))) == 1
            if n >= 2:
                assert dim_syt(Partition((n - 1, 1))) == n - 1

    def test_hook_formula_matches_enumeration(self):
        for n in range(1, 9):
            for p in enumerate_partitions(n):
                assert dim_syt(p) == sum(1 for _ in enumerate_syt(p))

    def test_transpose_invariant(self):
        for n in range(1, 10):
            for p in enumerate_partitions(n):
                assert dim_syt(p) == dim_syt(p.transpose())

    def test_square_sum_is_factorial(self):
        for n in range(0, 13):
            total = sum(dim_syt(p) ** 2 for p in enumerate_partitions(n))
            assert total == math.factorial(n)


class TestSkewDimensions:
    def test_single_cell(self):
        assert dim_skew(SkewShape(Partition((3, 1)), Partition((3,)))) == 1

    def test_empty_inner_reduces_to_dim_syt(self):
        p = Partition((4, 3, 1))
        assert dim_skew(SkewShape(p, Partition(()))) == dim_syt(p)

    def test_example_shape(self):
        shape = SkewShape(Partition((4, 3, 2)), Partition((2, 1)))
        assert dim_skew(shape) == brute_skew_count((4, 3, 2), (2, 1))

    def test_containment_enforced(self):
        with pytest.raises(ValueError):
            SkewShape(Partition((2,)), Partition((3,)))

    def test_matches_brute_force_up_to_8(self):
        for n in range(1, 9):
            for outer in enumerate_partitions(n):
                for size in range(0, n):
                    for inner in enumerate_subpartitions(outer, size):
                        got = dim_skew(SkewShape(outer, inner))
                        assert got == brute_skew_count(outer.parts, inner.parts)

    def test_branching_identity(self):
        for n in range(1, 11):
            for outer in enumerate_partitions(n):
                d = dim_syt(outer)
                for k in range(0, n + 1):
                    total = sum(
                        dim_syt(inner) * dim_skew(SkewShape(outer, inner))
                        for inner in enumerate_subpartitions(outer, n - k)
                    )
                    assert total == d


class TestDimensionBounds:
    def test_single_row_bound_tight(self):
        for n in range(1, 8):
            assert dim_upper_bound(Partition((n,))) == 1

    def test_examples(self):
        assert dim_upper_bound(Partition((4, 3, 1))) >= 70
        assert dim_upper_bound(Partition((2, 2))) == math.ceil(6 * math.sqrt(2))

    def test_bound_dominates_dimension(self):
        for n in range(1, 13):
            for p in enumerate_partitions(n):
                assert dim_upper_bound(p) >= dim_syt(p)


class TestSkewDimensionBound:
    def test_l_one_case(self):
        # n=10, k=3: outer (9,1), inner (7) has l = 3 - 9 + 7 = 1
        assert skew_dim_bound_check(Partition((9, 1)), Partition((7,)), 3)

    def test_single_row_outer_rejected(self):
        # l = k - n + inner.width <= 0 for outer (n)
        with pytest.raises(ValueError):
            skew_dim_bound_check(Partition((5,)), Partition((3,)), 2)

    def test_exhaustive_sweep(self):
        for n in range(1, 11):
            for outer in enumerate_partitions(n):
                for k in range(1, n + 1):
                    for inner in enumerate_subpartitions(outer, n - k):
                        if k - outer.width + inner.width > 0:
                            assert skew_dim_bound_check(outer, inner, k)
