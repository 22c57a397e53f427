"""Named invariant battery behind the CLI's `verify` command.

Each check replays one family of spec'd identities below the capacity
limits: closed-form spectra against the dense oracle, exact trace
identities, insertion-tableau extremality, the analytic eigenvalue
bounds, the TV sandwich, and the character cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .errors import check_capacity
from .mixing import (
    DegenerateBoundError,
    character_expectations,
    chebyshev_threshold,
    l2_upper_bound,
    variance_lower_bound,
)
from .oracle import (
    character_values,
    exact_tv_curve,
    fixed_point_stats,
    iter_distributions,
    kernel_coo_exact,
    numeric_spectrum,
)
from .partitions import (
    Partition,
    SkewShape,
    count_partitions,
    dim_skew,
    dim_syt,
    enumerate_partitions,
    enumerate_subpartitions,
    hardy_ramanujan_estimate,
)
from .spectrum import (
    ShuffleSpec,
    _eig_kstar_from_diff,
    eig_bounds_for_shape,
    coarse_bounds_check,
    spectrum_general,
    spectrum_kstar,
    transposition_count,
)
from .tableaux import (
    column_insertion_tableau,
    enumerate_syt,
    k_diagonal_index,
    row_insertion_tableau,
    shifted_k_diagonal_index,
)

VERIFY_MAX_N = 8


def assorted_general_sets(n: int) -> list[set[int]]:
    """The five reference active sets containing n used by the oracle checks."""
    return [{n}, {n - 1, n}, set(range(1, n + 1)), {2, n}, {1, 3, n}]


@dataclass
class VerifyResult:
    name: str
    ok: bool
    detail: str


def _expand(records) -> np.ndarray:
    return np.sort(np.concatenate([[float(r.value)] * r.multiplicity for r in records]))


def _check_kstar_spectrum(n_max: int, deep: bool) -> VerifyResult:
    top = min(n_max, 6)
    worst = 0.0
    for n in range(2, top + 1):
        for k in range(1, n + 1):
            numeric = numeric_spectrum(ShuffleSpec.kstar(n, k))
            closed = _expand(spectrum_kstar(n, k))
            worst = max(worst, float(np.abs(numeric - closed).max()))
    ok = worst < 1e-10
    return VerifyResult("kstar-spectrum-vs-oracle", ok, f"n<={top}, max deviation {worst:.2e}")


def _check_general_spectrum(n_max: int, deep: bool) -> VerifyResult:
    top = min(n_max, 5)
    worst = 0.0
    for n in range(4, top + 1):
        for active in assorted_general_sets(n):
            spec = ShuffleSpec.general(n, active)
            numeric = numeric_spectrum(spec)
            closed = _expand(spectrum_general(spec))
            worst = max(worst, float(np.abs(numeric - closed).max()))
    ok = worst < 1e-10
    return VerifyResult("general-spectrum-vs-oracle", ok, f"n<={top}, max deviation {worst:.2e}")


def _check_exact_identities(n_max: int, deep: bool) -> VerifyResult:
    for n in range(2, n_max + 1):
        for k in range(1, n + 1):
            records = spectrum_kstar(n, k)
            t_a = transposition_count(ShuffleSpec.kstar(n, k))
            if sum(r.multiplicity for r in records) != factorial(n):
                return VerifyResult("exact-trace-identities", False, f"mult sum off at n={n} k={k}")
            if sum(r.value * r.multiplicity for r in records) != Fraction(factorial(n), n):
                return VerifyResult("exact-trace-identities", False, f"trace off at n={n} k={k}")
            second = factorial(n) * (Fraction(1, n * n) + Fraction((n - 1) ** 2, n * n * t_a))
            if sum(r.value**2 * r.multiplicity for r in records) != second:
                return VerifyResult("exact-trace-identities", False, f"2nd moment off at n={n} k={k}")
    return VerifyResult("exact-trace-identities", True, f"exact equality for n<={n_max}, all k")


def _check_extremality(n_max: int, deep: bool) -> VerifyResult:
    top = min(n_max, VERIFY_MAX_N)
    checked = 0
    for n in range(1, top + 1):
        for shape in enumerate_partitions(n):
            row_t = row_insertion_tableau(shape)
            col_t = column_insertion_tableau(shape)
            tableaux = list(enumerate_syt(shape))
            for k in range(1, n + 1):
                values = [k_diagonal_index(s, k) for s in tableaux]
                if min(values) != k_diagonal_index(row_t, k) or max(values) != k_diagonal_index(col_t, k):
                    return VerifyResult("insertion-extremality", False, f"violated at {shape.parts}, k={k}")
                checked += len(values)
    return VerifyResult("insertion-extremality", True, f"{checked} tableau/k pairs, n<={top}")


def _check_minak(n_max: int, deep: bool) -> VerifyResult:
    checked = 0
    for n in range(2, 31):
        for shape in enumerate_partitions(n):
            col_t = column_insertion_tableau(shape)
            lam1 = shape.width
            for k in range(1, n + 1):
                lhs = shifted_k_diagonal_index(col_t, k)
                # exact comparison: (lhs - k) (n-1) >= C(k,2) (lam1 - 1)
                if (lhs - k) * (n - 1) < k * (k - 1) // 2 * (lam1 - 1):
                    return VerifyResult("minak-bound", False, f"violated at {shape.parts}, k={k}")
                checked += 1
    return VerifyResult("minak-bound", True, f"{checked} shape/k pairs, n<=30, exact rationals")


def _check_coarse_bounds(n_max: int, deep: bool) -> VerifyResult:
    top = min(n_max, VERIFY_MAX_N)
    for n in range(2, top + 1):
        for shape in enumerate_partitions(n):
            for k in range(1, n + 1):
                report = coarse_bounds_check(shape, n, k)
                if not report.all_ok:
                    return VerifyResult("coarse-eig-bounds", False, f"violated at {shape.parts}, k={k}")
                lo, hi = eig_bounds_for_shape(shape, n, k)
                for tableau in enumerate_syt(shape):
                    value = _eig_kstar_from_diff(n, k, k_diagonal_index(tableau, k))
                    if not (Fraction(2 - shape.height, n) <= value <= Fraction(shape.width, n)):
                        return VerifyResult("coarse-eig-bounds", False, f"part i fails at {shape.parts}, k={k}")
                    if not (lo <= value <= hi):
                        return VerifyResult("coarse-eig-bounds", False, f"interval fails at {shape.parts}, k={k}")
    return VerifyResult("coarse-eig-bounds", True, f"all tableaux, n<={top}")


def _check_sandwich(n_max: int, deep: bool) -> VerifyResult:
    top = min(n_max, 7 if deep else 6)
    factor = 4 if deep else 2
    for n in range(5, top + 1):
        t_max = factor * math.ceil(n * math.log(n))
        for k in range(1, n + 1):
            records = spectrum_kstar(n, k)
            curve = exact_tv_curve(ShuffleSpec.kstar(n, k), t_max)
            for t, exact in curve.points:
                upper = l2_upper_bound(records, t)
                e2 = character_expectations(n, k, t).top_minus_one
                try:
                    lower = max(0.0, variance_lower_bound(n, k, t, chebyshev_threshold(e2)))
                except DegenerateBoundError:
                    lower = 0.0
                if not (lower <= exact + 1e-9 and exact <= upper + 1e-9):
                    return VerifyResult("tv-sandwich", False, f"fails at n={n} k={k} t={t}")
    return VerifyResult("tv-sandwich", True, f"n in 5..{top}, t<={factor}*ceil(n log n)")


def _check_characters(n_max: int, deep: bool) -> VerifyResult:
    top = min(n_max, 7)
    t_max = 30 if deep else 12
    shapes = lambda n: [Partition((n,)), Partition((n - 1, 1)), Partition((n - 2, 2)), Partition((n - 2, 1, 1))]
    for n in range(5, top + 1):
        fixed, _ = fixed_point_stats(n)
        square = (fixed - 1.0) ** 2
        chi = [character_values(n, s) for s in shapes(n)]
        for k in range(1, n + 1):
            spec = ShuffleSpec.kstar(n, k)
            for t, dist in enumerate(iter_distributions(spec, t_max)):
                closed = character_expectations(n, k, t)
                oracle_values = [float(dist @ c) for c in chi]
                for a, b in zip(closed, oracle_values):
                    if abs(a - b) > 1e-9:
                        return VerifyResult("character-crosscheck", False, f"E mismatch at n={n} k={k} t={t}")
                if abs(float(dist @ square) - sum(closed)) > 1e-9:
                    return VerifyResult("character-crosscheck", False, f"(fix-1)^2 mismatch at n={n} k={k} t={t}")
    return VerifyResult("character-crosscheck", True, f"n in 5..{top}, t<={t_max}, tol 1e-9")


def _check_combinatorics(n_max: int, deep: bool) -> VerifyResult:
    for n in range(0, 13):
        if sum(dim_syt(p) ** 2 for p in enumerate_partitions(n)) != factorial(n):
            return VerifyResult("combinatorial-identities", False, f"sum d^2 != n! at n={n}")
    for n in range(1, 11):
        for lam in enumerate_partitions(n):
            d_lam = dim_syt(lam)
            for k in range(0, n + 1):
                total = sum(
                    dim_syt(mu) * dim_skew(SkewShape(lam, mu))
                    for mu in enumerate_subpartitions(lam, n - k)
                )
                if total != d_lam:
                    return VerifyResult("combinatorial-identities", False, f"branching fails at {lam.parts} k={k}")
    if count_partitions(100) != 190569292:
        return VerifyResult("combinatorial-identities", False, "p(100) wrong")
    ratio = count_partitions(100) / hardy_ramanujan_estimate(100)
    if not 0.9 < ratio < 1.0:
        return VerifyResult("combinatorial-identities", False, f"HR ratio {ratio} outside (0.9, 1)")
    return VerifyResult("combinatorial-identities", True, "dimension, branching, p(100), HR ratio")


def _check_kernel(n_max: int, deep: bool) -> VerifyResult:
    top = min(n_max, 6)
    for n in range(2, top + 1):
        for k in (1, n):
            spec = ShuffleSpec.kstar(n, k)
            t_a = transposition_count(spec)
            off = Fraction(n - 1, n * t_a)
            entries = dict(((r, c), v) for r, c, v in kernel_coo_exact(spec))
            rows: dict[int, Fraction] = {}
            counts: dict[int, int] = {}
            for (r, c), v in entries.items():
                rows[r] = rows.get(r, Fraction(0)) + v
                counts[r] = counts.get(r, 0) + 1
                if entries.get((c, r)) != v:
                    return VerifyResult("kernel-structure", False, f"asymmetric at n={n} k={k}")
                # distinct transpositions move x to distinct states, so every
                # off-diagonal entry is exactly the base weight
                if v != (Fraction(1, n) if r == c else off):
                    return VerifyResult("kernel-structure", False, f"bad entry at n={n} k={k}")
            if any(total != 1 for total in rows.values()):
                return VerifyResult("kernel-structure", False, f"row sums off at n={n} k={k}")
            if any(count != t_a + 1 for count in counts.values()):
                return VerifyResult("kernel-structure", False, f"support size off at n={n} k={k}")
    return VerifyResult("kernel-structure", True, f"exact symmetry and stochasticity, n<={top}")


CHECKS = [
    _check_combinatorics,
    _check_kstar_spectrum,
    _check_general_spectrum,
    _check_exact_identities,
    _check_extremality,
    _check_minak,
    _check_coarse_bounds,
    _check_sandwich,
    _check_characters,
    _check_kernel,
]


def run_verification(n_max: int = 6, deep: bool = False) -> list[VerifyResult]:
    """Run the full battery; raises CapacityError for n_max beyond the
    oracle range."""
    check_capacity(n_max <= VERIFY_MAX_N, f"verify: n={n_max} exceeds oracle capacity {VERIFY_MAX_N}")
    return [check(n_max, deep) for check in CHECKS]
