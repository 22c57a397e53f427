"""Partitions, dominance order, diagram statistics and tableau-count formulas.

Partitions of n index the irreducible representations of the symmetric
group; their diagram statistics (diagonal index, straight and skew
dimensions) are the raw material for the shuffle spectra built on top.
All counting here is exact arbitrary-precision integer arithmetic.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import check_capacity

DEFAULT_ENUMERATION_LIMIT = 200


class Partition:
    """A weakly decreasing sequence of positive integers.

    The empty partition is the unique partition of 0.  Indexing past the
    last part reads as 0, which keeps containment and dominance checks
    free of padding logic.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(v) for v in parts)
        for i, v in enumerate(parts):
            if v < 0:
                raise ValueError(f"parts must be nonnegative, got {parts}")
            if i and parts[i - 1] < v:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        while parts and parts[-1] == 0:  # tolerate zero padding
            parts = parts[:-1]
        self._parts = parts

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        """Size of the partition (number of boxes)."""
        return sum(self._parts)

    @property
    def width(self) -> int:
        """First part; 0 for the empty partition."""
        return self._parts[0] if self._parts else 0

    @property
    def height(self) -> int:
        """Number of parts."""
        return len(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative row index")
        return self._parts[i] if i < len(self._parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition{self._parts}"

    def transpose(self) -> "Partition":
        """Conjugate partition (reflect the diagram along the diagonal)."""
        return Partition(_transpose_tuple(self._parts))

    def contains(self, inner: "Partition") -> bool:
        """Cellwise containment: inner fits inside this diagram."""
        return all(inner[i] <= self[i] for i in range(len(inner)))


@dataclass(frozen=True)
class SkewShape:
    """Boxes of `outer` not in `inner`; requires cellwise containment."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def cells(self) -> int:
        return self.outer.n - self.inner.n


def _transpose_tuple(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    out = [0] * parts[0]
    for v in parts:
        for c in range(v):
            out[c] += 1
    return tuple(out)


def _iter_partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    # Reverse lexicographic: (n), (n-1,1), ..., (1,)*n.
    if n == 0:
        yield ()
        return
    cur = [n]
    while True:
        yield tuple(cur)
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return
        cur[i] -= 1
        rem = len(cur) - i - 1 + 1
        cur = cur[: i + 1]
        cap = cur[i]
        while rem > 0:
            take = min(cap, rem)
            cur.append(take)
            rem -= take


def enumerate_partitions(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[Partition]:
    """All partitions of n in reverse lexicographic order.

    The canonical order is the one spectrum records are labelled in, so
    it is part of the output contract.  Refuses n beyond `limit`: the
    list has p(n) entries and p(n) grows subexponentially but fast.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_capacity(n <= limit, f"enumerate_partitions: n={n} exceeds limit {limit}")
    return [Partition(t) for t in _iter_partition_tuples(n)]


_pn_cache = [1]
_pn_lock = threading.Lock()


def count_partitions(n: int) -> int:
    """p(n) via the Euler pentagonal-number recurrence, exact."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _pn_lock:
        while len(_pn_cache) <= n:
            m = len(_pn_cache)
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                g2 = k * (3 * k + 1) // 2
                if g1 > m and g2 > m:
                    break
                sign = -1 if k % 2 == 0 else 1
                if g1 <= m:
                    total += sign * _pn_cache[m - g1]
                if g2 <= m:
                    total += sign * _pn_cache[m - g2]
                k += 1
            _pn_cache.append(total)
        return _pn_cache[n]


def hardy_ramanujan_estimate(n: int) -> float:
    """The asymptotic (1/(4n*sqrt(3))) * exp(pi*sqrt(2n/3)) for p(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.exp(math.pi * math.sqrt(2.0 * n / 3.0)) / (4.0 * n * math.sqrt(3.0))


def dominates(lhs: Partition, rhs: Partition) -> bool:
    """Dominance order: every prefix sum of lhs >= that of rhs."""
    if lhs.n != rhs.n:
        raise ValueError(f"dominance needs equal sizes, got {lhs.n} and {rhs.n}")
    acc_l = acc_r = 0
    for i in range(max(len(lhs), len(rhs))):
        acc_l += lhs[i]
        acc_r += rhs[i]
        if acc_l < acc_r:
            return False
    return True


def diag_index(p: Partition) -> int:
    """Sum of contents j - i over all boxes (1-based rows and columns)."""
    return sum(v * (v - 1) // 2 - v * i for i, v in enumerate(p.parts))


def contains(outer: Partition, inner: Partition) -> bool:
    """Cellwise containment of inner in outer."""
    return outer.contains(inner)


def _iter_subpartition_tuples(parts: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    # Row by row.  suffix[i] caps what rows i.. can still hold, so the
    # feasible range for each part is tight even for near-full sizes.
    suffix = [0] * (len(parts) + 1)
    for i in range(len(parts) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + parts[i]

    def rec(i: int, prev: int, remaining: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(acc)
            return
        if i >= len(parts):
            return
        hi = min(parts[i], prev, remaining)
        lo = max(1, remaining - suffix[i + 1])
        for v in range(hi, lo - 1, -1):
            cap = 0
            for j in range(i + 1, len(parts)):
                cap += min(parts[j], v)
                if cap >= remaining - v:
                    break
            if remaining - v <= cap:
                acc.append(v)
                yield from rec(i + 1, v, remaining - v, acc)
                acc.pop()

    yield from rec(0, parts[0] if parts else 0, size, [])


def enumerate_subpartitions(p: Partition, size: int) -> list[Partition]:
    """All partitions of `size` contained in p, reverse lexicographic."""
    if not 0 <= size <= p.n:
        raise ValueError(f"size must be in [0, {p.n}], got {size}")
    subs = [Partition(t) for t in _iter_subpartition_tuples(p.parts, size)]
    subs.sort(key=lambda q: q.parts, reverse=True)
    return subs


@lru_cache(maxsize=1 << 20)
def _dim_syt_tuple(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    conj = _transpose_tuple(parts)
    hooks = 1
    for i, row in enumerate(parts):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return math.factorial(sum(parts)) // hooks


def dim_syt(p: Partition) -> int:
    """Number of standard Young tableaux of this shape (hook lengths)."""
    return _dim_syt_tuple(p.parts)


def _dim_skew_tuple(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    cells = sum(outer) - sum(inner)
    if cells <= 1:
        return 1
    if inner == ():
        return _dim_syt_tuple(outer)
    if inner == (1,):
        # Chains from (1) to outer in Young's lattice biject with chains
        # from the empty partition, so this equals dim_syt(outer).
        return _dim_syt_tuple(outer)
    if len(outer) > outer[0]:
        # Skew dimensions are transpose-invariant; keep the determinant
        # at size min(rows, columns).
        return _dim_skew_det(_transpose_tuple(outer), _transpose_tuple(inner))
    return _dim_skew_det(outer, inner)


@lru_cache(maxsize=1 << 18)
def _dim_skew_det(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    cells = sum(outer) - sum(inner)
    if len(outer) > 1 and inner and inner[0] >= outer[1]:
        # Row 1 shares no column with the rest: its cells form a free
        # horizontal strip, so the values split binomially.
        below = _dim_skew_tuple(outer[1:], inner[1:])
        return math.comb(cells, outer[0] - inner[0]) * below
    # Aitken determinant: cells! * det(1 / (outer_i - inner_j - i + j)!).
    rows = len(outer)
    mat = []
    for i in range(rows):
        row = []
        for j in range(rows):
            a = outer[i] - (inner[j] if j < len(inner) else 0) - i + j
            row.append(Fraction(0) if a < 0 else Fraction(1, math.factorial(a)))
        mat.append(row)
    det = _det_fraction(mat)
    value = math.factorial(cells) * det
    assert value.denominator == 1
    return int(value)


def _det_fraction(mat: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in mat]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    return det


def dim_skew(shape: SkewShape) -> int:
    """Number of standard fillings of the skew shape (Aitken determinant)."""
    return _dim_skew_tuple(shape.outer.parts, shape.inner.parts)


def dim_upper_bound(p: Partition) -> int:
    """ceil(C(n, width) * sqrt((n - width)!)), an upper bound for dim_syt."""
    n = p.n
    lam1 = p.width
    c = math.comb(n, lam1)
    rest = math.factorial(n - lam1)
    # ceil(c * sqrt(rest)) with exact integer square roots.
    sq = c * c * rest
    root = math.isqrt(sq)
    return root if root * root == sq else root + 1


def skew_dim_bound_check(outer: Partition, inner: Partition, k: int) -> bool:
    """Check d_mu * d_skew <= (4^j * k / n)^l * d_lambda, j = n - width,
    l = k - outer.width + inner.width (requires l > 0)."""
    n = outer.n
    if inner.n != n - k:
        raise ValueError("inner must partition n - k")
    if not outer.contains(inner):
        raise ValueError("inner not contained in outer")
    l = k - outer.width + inner.width
    if l <= 0:
        raise ValueError(f"bound requires l > 0, got l={l}")
    j = n - outer.width
    lhs = _dim_syt_tuple(inner.parts) * _dim_skew_tuple(outer.parts, inner.parts) * n**l
    rhs = 4 ** (j * l) * k**l * _dim_syt_tuple(outer.parts)
    return lhs <= rhs
