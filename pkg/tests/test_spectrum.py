from collections import Counter
from fractions import Fraction
from math import factorial

import pytest

from jmshuffle.errors import CapacityError, DegenerateSpecError
from jmshuffle.partitions import Partition, diag_index, dim_syt, enumerate_partitions
from jmshuffle.spectrum import (
    EigenvalueRecord,
    ShuffleSpec,
    coarse_bounds_check,
    eig_bounds_for_shape,
    eig_general,
    eig_kstar,
    spectrum_general,
    spectrum_kstar,
    spectrum_kstar_head,
    transposition_count,
)
from jmshuffle.tableaux import (
    StandardYoungTableau,
    column_insertion_tableau,
    enumerate_syt,
    restrict_to_pair,
    row_insertion_tableau,
)


class TestShuffleSpec:
    def test_kstar_is_suffix_set(self):
        spec = ShuffleSpec.kstar(6, 2)
        assert spec.active == frozenset({5, 6})

    def test_kstar_bounds(self):
        with pytest.raises(ValueError):
            ShuffleSpec.kstar(4, 5)

    def test_irreducibility_flag(self):
        assert ShuffleSpec.general(5, {3, 5}).is_irreducible
        assert not ShuffleSpec.general(5, {2, 3}).is_irreducible

    def test_element_one_tolerated(self):
        spec = ShuffleSpec.general(4, {1, 4})
        assert transposition_count(spec) == 3

    def test_degenerate_set_rejected(self):
        with pytest.raises(DegenerateSpecError):
            transposition_count(ShuffleSpec.general(4, {1}))


class TestTranspositionCount:
    def test_kstar_formula(self):
        assert transposition_count(ShuffleSpec.kstar(4, 2)) == 5
        for n in range(2, 12):
            for k in range(1, n + 1):
                assert transposition_count(ShuffleSpec.kstar(n, k)) == k * (2 * n - k - 1) // 2

    def test_star_and_full(self):
        assert transposition_count(ShuffleSpec.general(7, {7})) == 6
        assert transposition_count(ShuffleSpec.kstar(4, 4)) == 6


class TestEigGeneral:
    def test_single_row_is_one(self):
        for active in ({4}, {2, 4}, {1, 2, 3, 4}):
            t = row_insertion_tableau(Partition((4,)))
            assert eig_general(t, ShuffleSpec.general(4, active)) == 1

    def test_half_example(self):
        # star transpositions at n=4: a box of content 1 gives (1+1)/4
        t = StandardYoungTableau(((1, 4), (2,), (3,)))
        assert eig_general(t, ShuffleSpec.general(4, {4})) == Fraction(1, 2)

    def test_sign_representation(self):
        for n in range(2, 7):
            t = row_insertion_tableau(Partition((1,) * n))
            for active in ({n}, set(range(1, n + 1))):
                assert eig_general(t, ShuffleSpec.general(n, active)) == Fraction(2, n) - 1

    def test_transpose_pairing(self):
        for n in range(2, 7):
            for active in ({n}, {n - 1, n}, set(range(1, n + 1))):
                spec = ShuffleSpec.general(n, active)
                for p in enumerate_partitions(n):
                    for t in enumerate_syt(p):
                        total = eig_general(t, spec) + eig_general(t.transpose(), spec)
                        assert total == Fraction(2, n)


class TestEigKstar:
    def test_trivial_pair_is_one(self):
        for n in range(2, 9):
            for k in range(1, n + 1):
                assert eig_kstar(Partition((n,)), Partition((n - k,)), n, k) == 1

    def test_worked_example(self):
        assert eig_kstar(Partition((3, 1)), Partition((2,)), 4, 2) == Fraction(2, 5)

    def test_k_equals_n_simplification(self):
        for n in range(2, 9):
            for lam in enumerate_partitions(n):
                value = eig_kstar(lam, Partition(()), n, n)
                assert value == Fraction(1, n) + Fraction(2 * diag_index(lam), n * n)

    def test_k_one_is_content_formula(self):
        for n in range(2, 11):
            for record in spectrum_kstar(n, 1):
                lam, mu = record.label
                cell_rows = [i for i in range(lam.height) if lam[i] != mu[i]]
                assert len(cell_rows) == 1
                i = cell_rows[0]
                j = lam[i]  # 1-based column of the unique skew cell
                assert record.value == Fraction(1 + j - (i + 1), n)

    def test_containment_required(self):
        with pytest.raises(ValueError):
            eig_kstar(Partition((3, 1)), Partition((1, 1, 1)), 4, 1)

    def test_size_checks(self):
        with pytest.raises(ValueError):
            eig_kstar(Partition((3, 1)), Partition((2,)), 4, 1)


class TestSpectrumKstar:
    def test_two_cards(self):
        records = spectrum_kstar(2, 1)
        assert [(r.value, r.multiplicity) for r in records] == [(1, 1), (0, 1)]

    def test_sum_and_trace_n4_k2(self):
        records = spectrum_kstar(4, 2)
        assert sum(r.multiplicity for r in records) == 24
        assert sum(r.value * r.multiplicity for r in records) == 6

    def test_exact_identities(self):
        for n in range(2, 8):
            for k in range(1, n + 1):
                records = spectrum_kstar(n, k)
                t_a = k * (2 * n - k - 1) // 2
                assert sum(r.multiplicity for r in records) == factorial(n)
                assert sum(r.value * r.multiplicity for r in records) == Fraction(factorial(n), n)
                second = factorial(n) * (Fraction(1, n * n) + Fraction((n - 1) ** 2, n * n * t_a))
                assert sum(r.value**2 * r.multiplicity for r in records) == second

    def test_k_equals_n_multiplicities(self):
        for n in range(2, 8):
            for record in spectrum_kstar(n, n):
                lam, mu = record.label
                assert mu == Partition(())
                assert record.multiplicity == dim_syt(lam) ** 2

    def test_sorted_descending(self):
        records = spectrum_kstar(6, 3)
        values = [r.value for r in records]
        assert values == sorted(values, reverse=True)
        assert records[0].value == 1 and records[0].multiplicity == 1

    def test_value_range(self):
        for n in range(2, 8):
            for k in range(1, n + 1):
                for r in spectrum_kstar(n, k):
                    assert -1 < r.value <= 1

    def test_capacity(self):
        with pytest.raises(CapacityError):
            spectrum_kstar(61, 1)


class TestSpectrumGeneral:
    def test_two_cards(self):
        records = spectrum_general(ShuffleSpec.general(2, {2}))
        assert [(r.value, r.multiplicity) for r in records] == [(1, 1), (0, 1)]

    def test_n3_star(self):
        records = spectrum_general(ShuffleSpec.general(3, {3}))
        counted = Counter((r.value, r.multiplicity) for r in records)
        assert counted == Counter(
            {(Fraction(1), 1): 1, (Fraction(2, 3), 2): 2, (Fraction(0), 2): 2, (Fraction(-1, 3), 1): 1}
        )

    def test_multiplicities_sum(self):
        for n in range(2, 7):
            records = spectrum_general(ShuffleSpec.general(n, {n}))
            assert sum(r.multiplicity for r in records) == factorial(n)

    def test_aggregates_to_kstar(self):
        for n in range(2, 9):
            for k in range(1, n + 1):
                aggregated = Counter()
                for r in spectrum_general(ShuffleSpec.kstar(n, k)):
                    lam, mu = restrict_to_pair(r.label, k)
                    aggregated[(r.value, lam, mu)] += r.multiplicity
                direct = Counter(
                    {(r.value, r.label[0], r.label[1]): r.multiplicity for r in spectrum_kstar(n, k)}
                )
                assert aggregated == direct

    def test_capacity(self):
        with pytest.raises(CapacityError):
            spectrum_general(ShuffleSpec.general(6, {6}), cap=100)


class TestHeadSpectrum:
    def test_head_agrees_with_full(self):
        for k in (1, 4, 11):
            full = {
                (r.label[0], r.label[1]): (r.value, r.multiplicity)
                for r in spectrum_kstar(11, k)
            }
            head = spectrum_kstar_head(11, k, 4)
            for r in head:
                assert full[(r.label[0], r.label[1])] == (r.value, r.multiplicity)
            wide_or_tall = {
                key for key in full if key[0].width >= 7 or key[0].height >= 7
            }
            assert {(r.label[0], r.label[1]) for r in head} >= wide_or_tall

    def test_head_requires_narrow_cut(self):
        with pytest.raises(ValueError):
            spectrum_kstar_head(10, 1, 5)


class TestShapeBounds:
    def test_single_row(self):
        assert eig_bounds_for_shape(Partition((6,)), 6, 2) == (1, 1)

    def test_single_column(self):
        for n in range(2, 8):
            low, high = eig_bounds_for_shape(Partition((1,) * n), n, 2 if n > 2 else 1)
            assert low == high == Fraction(2, n) - 1

    def test_431_k3_upper_uses_column_insertion(self):
        low, high = eig_bounds_for_shape(Partition((4, 3, 1)), 8, 3)
        assert high == Fraction(1, 8) + Fraction(2 * 7, 8 * 3 * (16 - 4)) * 6

    def test_bounds_contain_all_eigenvalues(self):
        from jmshuffle.spectrum import _eig_kstar_from_diff
        from jmshuffle.tableaux import k_diagonal_index

        for n in range(2, 8):
            for p in enumerate_partitions(n):
                for k in range(1, n + 1):
                    low, high = eig_bounds_for_shape(p, n, k)
                    assert low <= high
                    for t in enumerate_syt(p):
                        value = _eig_kstar_from_diff(n, k, k_diagonal_index(t, k))
                        assert low <= value <= high


class TestCoarseBounds:
    def test_single_row_attains_upper(self):
        report = coarse_bounds_check(Partition((6,)), 6, 2)
        assert report.part_i_ok and report.eig_max == 1

    def test_part_ii_equality_case(self):
        # (n-1, 1) at k=1: the bound reduces exactly to (n-1)/n
        report = coarse_bounds_check(Partition((9, 1)), 10, 1)
        assert report.part_ii_applicable
        assert report.part_ii_bound == Fraction(9, 10)
        assert report.eig_max == Fraction(9, 10)
        assert report.part_ii_ok

    def test_sign_representation_tall_branch(self):
        # the tall branch must use the height-based form of the bound
        report = coarse_bounds_check(Partition((1,) * 8), 8, 3)
        assert report.part_ii_applicable and report.part_ii_ok

    def test_sweep(self):
        for n in range(2, 8):
            for p in enumerate_partitions(n):
                for k in range(1, n + 1):
                    assert coarse_bounds_check(p, n, k).all_ok
