"""Total-variation machinery: l2 upper bounds, cutoff times, character-based
lower bounds, Poisson limit profiles and the comparison bound against
random transpositions.

Eigenvalue bases stay exact rationals until the final power, which runs in
extended precision (mpmath) on the l2 path because n! multiplicities
multiplied by tiny eigenvalue powers underflow doubles.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from mpmath import mp, mpf

from .errors import check_capacity
from .partitions import _iter_partition_tuples, count_partitions
from .spectrum import (
    DEFAULT_KSTAR_CAP,
    EigenvalueRecord,
    ShuffleSpec,
    _diag_of_tuple,
    _eig_kstar_from_diff,
    _iter_kstar_terms,
    spectrum_general,
    spectrum_kstar,
    spectrum_kstar_head,
)

L2_DPS = 50
DEFAULT_HEAD_CUT = 8
EXACT_SERIES_MAX_N = 2 * DEFAULT_HEAD_CUT + 2  # below this, sum the series in full


class DegenerateBoundError(ValueError):
    """Chebyshev lower bound undefined because E2 <= l."""


@dataclass
class MixingCurve:
    """Ordered (t, value) samples of one mixing diagnostic."""

    kind: str  # l2_upper | exact_tv | lower_bound | profile_comparison
    points: list[tuple[int, float]]


def _spectrum_size(spectrum: list[EigenvalueRecord]) -> int:
    label = spectrum[0].label
    return label[0].n if isinstance(label, tuple) else label.n


def _l2_series(spectrum: list[EigenvalueRecord], t: int):
    total = mpf(0)
    for record in spectrum:
        if record.value == 1:
            continue
        base = mpf(record.value.numerator) / mpf(record.value.denominator)
        total += record.multiplicity * base ** (2 * t)
    return total


def l2_upper_bound(spectrum: list[EigenvalueRecord], t: int, dps: int = L2_DPS) -> float:
    """(1/2) * sqrt(sum over non-one eigenvalues of mult * value^(2t)).

    Requires the complete spectrum (multiplicities summing to n!); the
    square root of the full series bounds twice the TV distance.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if not spectrum:
        raise ValueError("empty spectrum")
    n = _spectrum_size(spectrum)
    if sum(r.multiplicity for r in spectrum) != math.factorial(n):
        raise ValueError(f"incomplete spectrum: multiplicities must sum to {n}!")
    with mp.workdps(dps):
        return float(0.5 * mp.sqrt(_l2_series(spectrum, t)))


def _l2_tail_bound(n: int, k: int, t: int, head: int):
    """Rigorous bound on the series over shapes with width, height < n - head.

    Layer j groups shapes with max(width, height) = n - j: at most 2 p(j)
    of them, each of squared dimension at most C(n,j)^2 j! and absolute
    eigenvalue at most (n-j)/n.  The central shapes are bounded by the
    full multiplicity n!.
    """
    j_mid = (n - 1) // 2
    tail = mpf(0)
    for j in range(head + 1, j_mid + 1):
        layer = mpf(2 * count_partitions(j) * math.comb(n, j) ** 2 * math.factorial(j))
        tail += layer * (mpf(n - j) / n) ** (2 * t)
    center_width = n - j_mid - 1
    tail += mpf(math.factorial(n)) * (mpf(center_width) / n) ** (2 * t)
    return tail


def l2_upper_bound_kstar(n: int, k: int, t: int, head: int = DEFAULT_HEAD_CUT,
                         dps: int = 60) -> float:
    """l2 bound for the k-star shuffle at sizes where the full spectrum is
    out of reach: exact head (all shapes with width or height >= n - head)
    plus a rigorous truncation tail.

    Always an upper bound on the exact series, hence on 2 TV; informative
    for t at or beyond the cutoff time, where the tail is negligible.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if n <= max(EXACT_SERIES_MAX_N, 2 * head + 2):
        return l2_upper_bound(spectrum_kstar(n, k, max_n=n), t, dps=dps)
    records = spectrum_kstar_head(n, k, head)
    with mp.workdps(dps):
        total = _l2_series(records, t) + _l2_tail_bound(n, k, t, head)
        return float(0.5 * mp.sqrt(total))


def cutoff_time(n: int, k: int, c: float) -> float:
    """t_{n,k}(c) = ((2n-(k+1)) / (2(n-1))) * n * (log n + c)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    return (2 * n - (k + 1)) / (2 * (n - 1)) * n * (math.log(n) + c)


def cutoff_step(n: int, k: int, c: float) -> int:
    """Ceiling of the cutoff time, clamped at step 0 for very negative c."""
    return max(0, math.ceil(cutoff_time(n, k, c)))


class CharacterExpectations(NamedTuple):
    """E[chi] under P^t(id, .) for the four low shapes; None when the shape
    does not exist at this n."""

    top: float
    top_minus_one: float | None
    two_row: float | None
    hook: float | None

    @property
    def variance(self) -> float:
        """Var of chi_(n-1,1), from chi^2 = sum of the four characters."""
        if None in self:
            raise ValueError("variance needs all four shapes (n >= 4)")
        return self.top + self.top_minus_one + self.two_row + self.hook - self.top_minus_one**2


def character_expectations(n: int, k: int, t: int) -> CharacterExpectations:
    """Closed-form expectations of the four low characters for k-star.

    Each is an integer-weighted sum of exact eigenvalue bases raised to
    the t-th power; the weights combine consistently even when formally
    negative (the bases coincide there).
    """
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    if t < 0:
        raise ValueError("t must be nonnegative")
    alpha = Fraction(2 * (n - 1), n * k * (2 * n - k - 1))

    def power(multiple: int) -> float:
        return float(1 - alpha * multiple) ** t

    # Signed integer weights: products of consecutive integers stay exact
    # under // 2 and the negative cases cancel against coinciding bases.
    e2 = k * power(n) + (n - 1 - k) * power(k)
    e3 = e4 = None
    if n >= 4:
        e3 = (
            k * (k - 1) // 2 * power(2 * (n - 1))
            + k * (n - 1 - k) * power(k + n - 2)
            + (n - k) * (n - 3 - k) // 2 * power(2 * k)
        )
    if n >= 3:
        e4 = (
            k * (k - 1) // 2 * power(2 * n)
            + k * (n - 1 - k) * power(k + n)
            + (n - 1 - k) * (n - 2 - k) // 2 * power(2 * k)
        )
    return CharacterExpectations(1.0, e2, e3, e4)


_derangements = [1, 0]
_derangement_lock = threading.Lock()


def derangement_count(m: int) -> int:
    """Number of permutations of m elements with no fixed point, exact."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    with _derangement_lock:
        while len(_derangements) <= m:
            i = len(_derangements)
            _derangements.append((i - 1) * (_derangements[i - 1] + _derangements[i - 2]))
        return _derangements[m]


def fixed_point_ball_mass(n: int, l: float) -> float:
    """U(|fix - 1| <= l): exact uniform mass from binomial*derangement counts."""
    if l <= 0:
        raise ValueError("l must be positive")
    total = sum(
        math.comb(n, i) * derangement_count(n - i)
        for i in range(n + 1)
        if abs(i - 1) <= l
    )
    return float(Fraction(total, math.factorial(n)))


def chebyshev_threshold(e2: float, c: float | None = None) -> float:
    """Recommended l for the second-moment bound: the paper's e^(-c)/2 when
    that stays below E2, otherwise E2/2 (the Chebyshev step needs E2 > l)."""
    if e2 <= 0:
        raise ValueError("E2 must be positive")
    if c is None:
        return e2 / 2.0
    return min(math.exp(-c) / 2.0, e2 / 2.0)


def variance_lower_bound(n: int, k: int, t: int, l: float,
                         uniform_mass: str = "exact") -> float:
    """Second-moment lower bound on d(t): U(F_l) - Var/(E2 - l)^2.

    `uniform_mass` picks the floor for U(F_l): "exact" computes it from
    derangement counts (rigorous at every n), "asymptotic" uses the
    paper's large-n reporting form 1 - 1/(e*l).  May be negative; callers
    clamp to 0 for display.
    """
    if l <= 0:
        raise ValueError("l must be positive")
    if uniform_mass not in ("exact", "asymptotic"):
        raise ValueError(f"unknown uniform_mass mode {uniform_mass!r}")
    expectations = character_expectations(n, k, t)
    e2 = expectations.top_minus_one
    if e2 is None or e2 <= l:
        raise DegenerateBoundError(f"need E2 > l, got E2={e2} l={l}")
    variance = expectations.variance
    if uniform_mass == "exact":
        floor = fixed_point_ball_mass(n, l)
    else:
        floor = 1.0 - 1.0 / (math.e * l)
    return floor - variance / (e2 - l) ** 2


def _poisson_pmf(rate: float, j: int) -> float:
    if rate == 0.0:
        return 1.0 if j == 0 else 0.0
    return math.exp(j * math.log(rate) - rate - math.lgamma(j + 1))


def poisson_tv(a: float, b: float, tol: float = 1e-12) -> float:
    """Total variation between Poisson(a) and Poisson(b) by truncated
    summation; stops once both remaining tails are below tol/4."""
    if a < 0 or b < 0:
        raise ValueError("rates must be nonnegative")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a == b:
        return 0.0
    total = 0.0
    cum_a = cum_b = 0.0
    j = 0
    limit = 1.0 - tol / 4.0
    while cum_a < limit or cum_b < limit:
        pa = _poisson_pmf(a, j)
        pb = _poisson_pmf(b, j)
        total += abs(pa - pb)
        cum_a += pa
        cum_b += pb
        j += 1
    return min(1.0, 0.5 * total)


def limit_profile(c: float) -> float:
    """Limiting TV profile at the cutoff window: d_TV(Poiss(1+e^-c), Poiss(1))."""
    return poisson_tv(1.0 + math.exp(-c), 1.0)


def profile_comparison_bound(n: int, k: int, c: float,
                             max_n: int = DEFAULT_KSTAR_CAP) -> float:
    """Shared-eigenbasis comparison with random transpositions:
    (1/2) sqrt(sum over nontrivial pairs of mult * (s_lam^t1 - s_pair^t2)^2),
    with t1, t2 the rounded cutoff steps of the two chains at the same c."""
    check_capacity(n <= max_n, f"profile_comparison_bound: n={n} exceeds capacity {max_n}")
    t1 = cutoff_step(n, n, c)
    t2 = cutoff_step(n, k, c)
    total = 0.0
    for lam, _mu, value, mult in _iter_kstar_terms(_iter_partition_tuples(n), n, k):
        if lam == (n,):
            continue  # the unique trivial pair
        s_lam = float(_eig_kstar_from_diff(n, n, _diag_of_tuple(lam)))
        diff = s_lam**t1 - float(value) ** t2
        total += mult * diff * diff
    return 0.5 * math.sqrt(total)


def build_mixing_curves(spec: ShuffleSpec, t_max: int,
                        include_exact: bool | None = None) -> list[MixingCurve]:
    """Assemble the standard curve overlay for one shuffle: l2 upper bound,
    clamped character lower bound (k-star, n >= 4), and the oracle's exact
    TV when the state space is explicit (n <= 8 by default)."""
    n = spec.n
    curves = []
    ts = range(t_max + 1)

    truncated = spec.is_kstar and n > EXACT_SERIES_MAX_N
    if truncated:
        records = spectrum_kstar_head(n, spec.k, DEFAULT_HEAD_CUT)
    else:
        records = spectrum_kstar(n, spec.k) if spec.is_kstar else spectrum_general(spec)
    l2_points = []
    with mp.workdps(60 if truncated else L2_DPS):
        for t in ts:
            total = _l2_series(records, t)
            if truncated:
                total += _l2_tail_bound(n, spec.k, t, DEFAULT_HEAD_CUT)
            l2_points.append((t, float(0.5 * mp.sqrt(total))))
    curves.append(MixingCurve("l2_upper", l2_points))

    if spec.is_kstar and n >= 4:
        lower_points = []
        for t in ts:
            e2 = character_expectations(n, spec.k, t).top_minus_one
            try:
                bound = variance_lower_bound(n, spec.k, t, chebyshev_threshold(e2))
            except DegenerateBoundError:
                bound = 0.0
            lower_points.append((t, max(0.0, bound)))
        curves.append(MixingCurve("lower_bound", lower_points))

    if include_exact is None:
        include_exact = n <= 8
    if include_exact:
        from . import oracle  # local import: oracle depends on this module

        curves.append(oracle.exact_tv_curve(spec, t_max))
    return curves
