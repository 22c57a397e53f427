"""Closed-form spectra of transposition shuffles driven by Jucys-Murphy sets.

Two labellings coexist: per standard tableau for an arbitrary active set,
and per (outer, inner) partition pair for the k-star shuffle, where the
eigenvalue depends only on the difference of diagonal indices.  Values are
exact rationals; multiplicities exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Union

from .errors import DegenerateSpecError, check_capacity
from .partitions import (
    Partition,
    _dim_skew_tuple,
    _dim_syt_tuple,
    _iter_partition_tuples,
    _iter_subpartition_tuples,
    _transpose_tuple,
    diag_index,
)
from .tableaux import (
    StandardYoungTableau,
    column_insertion_tableau,
    enumerate_syt,
    k_diagonal_index,
    row_insertion_tableau,
)

DEFAULT_KSTAR_CAP = 60
DEFAULT_GENERAL_CAP = 10**6


@dataclass(frozen=True)
class ShuffleSpec:
    """Deck size n plus the active set A of Jucys-Murphy indices.

    The allowed moves are the transpositions (i, j) with j in A and i < j;
    each step holds with probability 1/n and otherwise applies a uniform
    element of that set.  `k` is set when the spec was built as a k-star
    shuffle (A = {n-k+1, ..., n}), which selects the pair labelling.
    """

    n: int
    active: frozenset[int]
    k: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("deck size must be at least 2")
        if not self.active or not all(1 <= a <= self.n for a in self.active):
            raise ValueError("active set must be a nonempty subset of 1..n")
        if self.k is not None and set(range(self.n - self.k + 1, self.n + 1)) != self.active:
            raise ValueError("k-star spec must have A = {n-k+1, ..., n}")

    @classmethod
    def kstar(cls, n: int, k: int) -> "ShuffleSpec":
        if not 1 <= k <= n:
            raise ValueError(f"k must be in [1, {n}], got {k}")
        return cls(n, frozenset(range(n - k + 1, n + 1)), k)

    @classmethod
    def general(cls, n: int, active) -> "ShuffleSpec":
        return cls(n, frozenset(active))

    @property
    def is_kstar(self) -> bool:
        return self.k is not None

    @property
    def is_irreducible(self) -> bool:
        """The walk reaches all of S_n iff n is active; otherwise the moves
        generate a proper subgroup and TV-to-uniform is meaningless."""
        return self.n in self.active


def transposition_count(spec: ShuffleSpec) -> int:
    """|T_A| = sum over active j of (j - 1); element 1 contributes nothing."""
    total = sum(j - 1 for j in spec.active)
    if total == 0:
        raise DegenerateSpecError(f"active set {sorted(spec.active)} yields no transpositions")
    return total


Label = Union[tuple[Partition, Partition], StandardYoungTableau]


@dataclass(frozen=True)
class EigenvalueRecord:
    """One eigenvalue with its exact multiplicity and combinatorial label."""

    value: Fraction
    multiplicity: int
    label: Label


def eig_general(tableau: StandardYoungTableau, spec: ShuffleSpec) -> Fraction:
    """Eigenvalue labelled by a standard tableau:
    1/n + (n-1)/(n*|T_A|) * sum of contents of boxes holding active values."""
    n = spec.n
    if tableau.n != n:
        raise ValueError(f"tableau has {tableau.n} boxes, spec has n={n}")
    t_a = transposition_count(spec)
    content_sum = 0
    for v in spec.active:
        i, j = tableau.position_of(v)
        content_sum += j - i
    return Fraction(1, n) + Fraction(n - 1, n * t_a) * content_sum


def eig_kstar(lam: Partition, mu: Partition, n: int, k: int) -> Fraction:
    """Eigenvalue of the k-star shuffle for the pair (lam, mu):
    1/n + 2(n-1)/(n*k*(2n-k-1)) * (Diag(lam) - Diag(mu))."""
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    if lam.n != n:
        raise ValueError(f"lam must partition {n}")
    if mu.n != n - k:
        raise ValueError(f"mu must partition {n - k}")
    if not lam.contains(mu):
        raise ValueError(f"{mu} not contained in {lam}")
    return _eig_kstar_from_diff(n, k, diag_index(lam) - diag_index(mu))


def _eig_kstar_from_diff(n: int, k: int, diag_diff: int) -> Fraction:
    return Fraction(1, n) + Fraction(2 * (n - 1), n * k * (2 * n - k - 1)) * diag_diff


def _diag_of_tuple(parts: tuple[int, ...]) -> int:
    return sum(v * (v - 1) // 2 - v * i for i, v in enumerate(parts))


def _iter_kstar_terms(
    lam_tuples: Iterator[tuple[int, ...]], n: int, k: int
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Fraction, int]]:
    """Yield (lam, mu, eigenvalue, multiplicity) over the given shapes.

    The eigenvalue depends on (lam, mu) only through the diagonal-index
    difference, so values are memoized on it.
    """
    values: dict[int, Fraction] = {}

    def value_for(diff: int) -> Fraction:
        value = values.get(diff)
        if value is None:
            value = values[diff] = _eig_kstar_from_diff(n, k, diff)
        return value

    for lam in lam_tuples:
        d_lam = _dim_syt_tuple(lam)
        if k == 1:
            # mu is lam minus one removable corner; the skew is one cell.
            for i, part in enumerate(lam):
                if i + 1 < len(lam) and lam[i + 1] == part:
                    continue
                mu = lam[:i] + ((part - 1,) if part > 1 else ()) + lam[i + 1 :]
                yield lam, mu, value_for(part - 1 - i), d_lam * _dim_syt_tuple(mu)
            continue
        diag_lam = _diag_of_tuple(lam)
        for mu in _iter_subpartition_tuples(lam, n - k):
            mult = d_lam * _dim_syt_tuple(mu) * _dim_skew_tuple(lam, mu)
            yield lam, mu, value_for(diag_lam - _diag_of_tuple(mu)), mult


def _desc(parts: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-v for v in parts)


def _record_sort_key(record: EigenvalueRecord):
    # Descending value, then reverse-lexicographic labels (the canonical
    # partition order), so exports are stable across runs.
    if isinstance(record.label, tuple):
        lam, mu = record.label
        tail = (_desc(lam.parts), _desc(mu.parts))
    else:
        tail = (_desc(record.label.shape.parts), record.label.rows)
    return (-record.value, tail)


def spectrum_kstar(n: int, k: int, max_n: int = DEFAULT_KSTAR_CAP) -> list[EigenvalueRecord]:
    """Complete k-star spectrum: one record per pair (lam, mu) with
    mu a partition of n-k contained in lam; multiplicities sum to n!."""
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    check_capacity(n <= max_n, f"spectrum_kstar: n={n} exceeds capacity {max_n}")
    records = [
        EigenvalueRecord(value, mult, (Partition(lam), Partition(mu)))
        for lam, mu, value, mult in _iter_kstar_terms(_iter_partition_tuples(n), n, k)
    ]
    records.sort(key=_record_sort_key)
    return records


def spectrum_general(spec: ShuffleSpec, cap: int = DEFAULT_GENERAL_CAP) -> list[EigenvalueRecord]:
    """Spectrum of an arbitrary active set: one record per standard tableau,
    each carrying multiplicity dim_syt(shape)."""
    n = spec.n
    transposition_count(spec)  # reject degenerate specs up front
    total = sum(_dim_syt_tuple(lam) for lam in _iter_partition_tuples(n))
    check_capacity(total <= cap, f"spectrum_general: {total} tableaux exceed capacity {cap}")
    records = []
    for lam in _iter_partition_tuples(n):
        shape = Partition(lam)
        d_lam = _dim_syt_tuple(lam)
        for tableau in enumerate_syt(shape):
            records.append(EigenvalueRecord(eig_general(tableau, spec), d_lam, tableau))
    records.sort(key=_record_sort_key)
    return records


def spectrum_kstar_head(n: int, k: int, j_max: int) -> list[EigenvalueRecord]:
    """Records for every shape with width >= n - j_max or height >= n - j_max.

    This is the exactly-evaluated head of the spectrum used by the
    truncated l2 bound at sizes where full enumeration is impossible.
    Requires j_max < (n-1)/2 so wide and tall shapes cannot coincide.
    """
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    if not 0 <= j_max < (n - 1) / 2:
        raise ValueError(f"j_max must be in [0, (n-1)/2), got {j_max}")

    def head_shapes() -> Iterator[tuple[int, ...]]:
        for j in range(j_max + 1):
            for rest in _iter_partition_tuples(j):
                wide = (n - j,) + rest
                yield wide
                yield _transpose_tuple(wide)  # tall mirror, disjoint since j_max < (n-1)/2

    records = [
        EigenvalueRecord(value, mult, (Partition(lam), Partition(mu)))
        for lam, mu, value, mult in _iter_kstar_terms(head_shapes(), n, k)
    ]
    records.sort(key=_record_sort_key)
    return records


def eig_bounds_for_shape(lam: Partition, n: int, k: int) -> tuple[Fraction, Fraction]:
    """(eigenvalue at the row-insertion tableau, at the column-insertion
    tableau); every eigenvalue of the shape lies in this interval."""
    if lam.n != n:
        raise ValueError(f"lam must partition {n}")
    low = _eig_kstar_from_diff(n, k, k_diagonal_index(row_insertion_tableau(lam), k))
    high = _eig_kstar_from_diff(n, k, k_diagonal_index(column_insertion_tableau(lam), k))
    return low, high


@dataclass(frozen=True)
class CoarseBoundsReport:
    """Outcome of the per-shape analytic bounds at a given (n, k)."""

    shape: Partition
    n: int
    k: int
    eig_min: Fraction
    eig_max: Fraction
    part_i_ok: bool
    part_ii_applicable: bool
    part_ii_bound: Fraction | None
    part_ii_ok: bool | None

    @property
    def all_ok(self) -> bool:
        return self.part_i_ok and (self.part_ii_ok is not False)


def coarse_bounds_check(lam: Partition, n: int, k: int) -> CoarseBoundsReport:
    """Check (2-m)/n <= eig <= width/n on the extreme tableaux, and the
    sharper unbalanced-shape bound when width or height exceeds 6n/10.

    The unbalanced bound uses width on the wide branch and height on the
    tall branch (the two branches are transposes of each other).
    """
    eig_min, eig_max = eig_bounds_for_shape(lam, n, k)
    lam1, m = lam.width, lam.height
    part_i = Fraction(2 - m, n) <= eig_min and eig_max <= Fraction(lam1, n)

    applicable = 10 * lam1 > 6 * n or 10 * m > 6 * n
    bound = None
    part_ii = None
    if applicable:
        prefactor = Fraction(2 * (n - 1), 2 * n - k - 1)
        bound = Fraction(1)
        if 10 * lam1 > 6 * n:
            bound = min(bound, 1 - prefactor * Fraction(n - lam1, n) * Fraction(lam1 + 1, n))
        if 10 * m > 6 * n:
            bound = min(bound, 1 - prefactor * Fraction(n - m, n) * Fraction(m + 1, n))
        part_ii = max(abs(eig_min), abs(eig_max)) <= bound
    return CoarseBoundsReport(lam, n, k, eig_min, eig_max, part_i, applicable, bound, part_ii)
