"""Brute-force ground truth at small deck sizes.

Everything here works on the explicit n!-state chain: exact sparse kernels,
dense numeric spectra, total-variation curves, character expectations from
fixed-point statistics, and a vectorized Monte Carlo sampler for sizes the
explicit chain cannot reach.
"""

from __future__ import annotations

import csv
import struct
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

import numpy as np
import scipy.sparse as sp

from .errors import check_capacity
from .mixing import MixingCurve
from .partitions import Partition
from .spectrum import ShuffleSpec, transposition_count

ORACLE_MAX_N = 8
EIGENSOLVE_MAX_N = 6


def rank_permutation(perm: Sequence[int]) -> int:
    """Lehmer (factorial number system) rank of a permutation of 0..n-1.

    Rank 0 is the identity and ranks follow lexicographic order on the
    one-line notation.
    """
    n = len(perm)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if perm[j] < perm[i])
        rank += smaller * factorial(n - 1 - i)
    return rank


def unrank_permutation(n: int, rank: int) -> tuple[int, ...]:
    """Inverse of rank_permutation."""
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank must be in [0, {n}!), got {rank}")
    pool = list(range(n))
    out = []
    for i in range(n):
        f = factorial(n - 1 - i)
        digit, rank = divmod(rank, f)
        out.append(pool.pop(digit))
    return tuple(out)


def all_permutations(n: int) -> list[tuple[int, ...]]:
    """All permutations of 0..n-1 in rank order."""
    return list(permutations(range(n)))


def active_transpositions(spec: ShuffleSpec) -> list[tuple[int, int]]:
    """The moves T_A as 0-based position pairs (i, j), i < j."""
    return [(i, j - 1) for j in sorted(spec.active) for i in range(j - 1)]


def _kernel_structure(spec: ShuffleSpec) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    n = spec.n
    perms = all_permutations(n)
    index = {p: r for r, p in enumerate(perms)}
    moves = active_transpositions(spec)
    neighbors = []
    for p in perms:
        row = []
        for i, j in moves:
            q = list(p)
            q[i], q[j] = q[j], q[i]  # right multiplication: swap positions
            row.append(index[tuple(q)])
        neighbors.append(row)
    return perms, neighbors


def build_kernel(spec: ShuffleSpec, max_n: int = ORACLE_MAX_N) -> sp.csr_matrix:
    """Row-stochastic transition matrix on all n! states.

    Diagonal 1/n, off-diagonal (n-1)/(n*|T_A|) at the |T_A| neighbors of
    each state.  Symmetric because the moves are involutions with equal
    weight.
    """
    n = spec.n
    check_capacity(n <= max_n, f"build_kernel: n={n} exceeds capacity {max_n}")
    t_a = transposition_count(spec)
    _, neighbors = _kernel_structure(spec)
    size = factorial(n)
    off = (n - 1) / (n * t_a)
    indptr = [0]
    indices = []
    data = []
    for r, row in enumerate(neighbors):
        cols = sorted(set(row + [r]))
        for c in cols:
            indices.append(c)
            data.append(1.0 / n if c == r else off * row.count(c))
        indptr.append(len(indices))
    return sp.csr_matrix((data, indices, indptr), shape=(size, size))


def kernel_coo_exact(spec: ShuffleSpec, max_n: int = ORACLE_MAX_N) -> Iterator[tuple[int, int, Fraction]]:
    """Kernel entries as (row, col, exact probability), row-major."""
    n = spec.n
    check_capacity(n <= max_n, f"kernel_coo_exact: n={n} exceeds capacity {max_n}")
    t_a = transposition_count(spec)
    off = Fraction(n - 1, n * t_a)
    _, neighbors = _kernel_structure(spec)
    for r, row in enumerate(neighbors):
        cols = sorted(set(row + [r]))
        for c in cols:
            yield r, c, (Fraction(1, n) if c == r else off * row.count(c))


def dump_kernel_csv(spec: ShuffleSpec, path) -> None:
    """Write the exact kernel as coordinate-list CSV (row, col, num, den)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["row", "col", "num", "den"])
        for r, c, v in kernel_coo_exact(spec):
            writer.writerow([r, c, v.numerator, v.denominator])


def numeric_spectrum(spec: ShuffleSpec, max_n: int = EIGENSOLVE_MAX_N) -> np.ndarray:
    """All n! eigenvalues of the kernel by dense symmetric eigendecomposition,
    sorted ascending.  Dense n!^2 storage: n=7 needs ~200 MB, so the guard
    sits at 6 unless raised."""
    n = spec.n
    check_capacity(n <= max_n, f"numeric_spectrum: n={n} exceeds capacity {max_n}")
    dense = build_kernel(spec, max_n=max_n).toarray()
    return np.linalg.eigvalsh(dense)


def iter_distributions(spec: ShuffleSpec, t_max: int, start_rank: int = 0,
                       max_n: int = ORACLE_MAX_N) -> Iterator[np.ndarray]:
    """Yield P^t(start, .) for t = 0..t_max as dense probability vectors."""
    kernel = build_kernel(spec, max_n=max_n)
    dist = np.zeros(kernel.shape[0])
    dist[start_rank] = 1.0
    yield dist
    for _ in range(t_max):
        dist = kernel.T @ dist  # symmetric, transpose only for clarity
        yield dist


def exact_tv_curve(spec: ShuffleSpec, t_max: int, start_rank: int = 0,
                   max_n: int = ORACLE_MAX_N) -> MixingCurve:
    """Exact total variation distance to uniform for t = 0..t_max."""
    size = factorial(spec.n)
    uniform = 1.0 / size
    points = []
    for t, dist in enumerate(iter_distributions(spec, t_max, start_rank, max_n)):
        points.append((t, 0.5 * float(np.abs(dist - uniform).sum())))
    return MixingCurve("exact_tv", points)


SUPPORTED_CHARACTER_SHAPES = ("top", "top_minus_one", "two_row", "hook")


def _character_shape_tag(n: int, shape: Partition) -> str:
    parts = shape.parts
    if parts == (n,):
        return "top"
    if parts == (n - 1, 1):
        return "top_minus_one"
    if parts == (n - 2, 2):
        return "two_row"
    if parts == (n - 2, 1, 1):
        return "hook"
    raise ValueError(f"unsupported character shape {parts} for n={n}")


def fixed_point_stats(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(fixed points, 2-cycles) for every permutation, indexed by rank."""
    perms = all_permutations(n)
    fixed = np.empty(len(perms), dtype=np.int64)
    two_cycles = np.empty(len(perms), dtype=np.int64)
    for r, p in enumerate(perms):
        f = sum(1 for i in range(n) if p[i] == i)
        c2 = sum(1 for i in range(n) if p[i] > i and p[p[i]] == i)
        fixed[r] = f
        two_cycles[r] = c2
    return fixed, two_cycles


def character_values(n: int, shape: Partition) -> np.ndarray:
    """Character of `shape` on every permutation, from fixed-point counts.

    Standard evaluations: chi_(n) = 1, chi_(n-1,1) = f - 1,
    chi_(n-2,2) = f(f-3)/2 + c2, chi_(n-2,1,1) = (f-1)(f-2)/2 - c2,
    with f fixed points and c2 two-cycles.
    """
    tag = _character_shape_tag(n, shape)
    f, c2 = fixed_point_stats(n)
    if tag == "top":
        return np.ones_like(f, dtype=np.float64)
    if tag == "top_minus_one":
        return (f - 1).astype(np.float64)
    if tag == "two_row":
        return (f * (f - 3)) / 2.0 + c2
    return ((f - 1) * (f - 2)) / 2.0 - c2


def character_expectation_oracle(spec: ShuffleSpec, t: int, shape: Partition,
                                 max_n: int = ORACLE_MAX_N) -> float:
    """E[chi_shape] under P^t(id, .) by direct summation."""
    check_capacity(spec.n <= max_n, f"character oracle: n={spec.n} exceeds capacity {max_n}")
    chi = character_values(spec.n, shape)
    dist = None
    for dist in iter_distributions(spec, t, max_n=max_n):
        pass
    return float(dist @ chi)


@dataclass(frozen=True)
class WalkStats:
    """Summary of a Monte Carlo run: statistics of fix - 1 at time t."""

    n: int
    k: int | None
    t: int
    trials: int
    seed: int
    mean_fix_minus_one: float
    var_fix_minus_one: float
    histogram: dict[int, int]

    @property
    def stderr(self) -> float:
        return (self.var_fix_minus_one / self.trials) ** 0.5


def simulate_walk(spec: ShuffleSpec, t: int, trials: int, seed: int) -> np.ndarray:
    """Run `trials` independent walks for t steps; returns the final
    permutations as a (trials, n) array.

    Step law: hold with probability 1/n, otherwise pick active index j
    with probability (j-1)/|T_A| and i uniform below it, and apply (i j).
    Uses the Philox counter-based generator, so results are reproducible
    across platforms for a fixed 64-bit seed.
    """
    n = spec.n
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.Generator(np.random.Philox(seed))
    actives = np.array([j for j in sorted(spec.active) if j >= 2], dtype=np.int64)
    weights = (actives - 1).astype(np.float64)
    cumw = np.cumsum(weights / weights.sum())
    perms = np.tile(np.arange(n, dtype=np.int16), (trials, 1))
    rows = np.arange(trials)
    for _ in range(t):
        u = rng.random(trials)
        move = u >= 1.0 / n
        j_pos = actives[np.searchsorted(cumw, rng.random(trials), side="right")] - 1
        i_pos = (rng.random(trials) * j_pos).astype(np.int64)
        r = rows[move]
        ci = i_pos[move]
        cj = j_pos[move]
        tmp = perms[r, ci].copy()
        perms[r, ci] = perms[r, cj]
        perms[r, cj] = tmp
    return perms


def sample_walk(spec: ShuffleSpec, t: int, trials: int, rng_seed: int) -> WalkStats:
    """Monte Carlo statistics of fix - 1 after t steps."""
    perms = simulate_walk(spec, t, trials, rng_seed)
    fix = (perms == np.arange(spec.n, dtype=np.int16)).sum(axis=1)
    stat = fix.astype(np.float64) - 1.0
    counts = np.bincount(fix, minlength=spec.n + 1)
    histogram = {i: int(c) for i, c in enumerate(counts) if c}
    return WalkStats(
        n=spec.n,
        k=spec.k,
        t=t,
        trials=trials,
        seed=rng_seed,
        mean_fix_minus_one=float(stat.mean()),
        var_fix_minus_one=float(stat.var(ddof=1)) if trials > 1 else 0.0,
        histogram=histogram,
    )


_SNAPSHOT_HEADER = struct.Struct("<II")


def save_distribution(path, n: int, t: int, probs: np.ndarray) -> None:
    """Binary snapshot: 8-byte header (n, t as uint32 LE), then float64 LE."""
    with open(path, "wb") as fh:
        fh.write(_SNAPSHOT_HEADER.pack(n, t))
        fh.write(np.asarray(probs, dtype="<f8").tobytes())


def load_distribution(path) -> tuple[int, int, np.ndarray]:
    with open(path, "rb") as fh:
        n, t = _SNAPSHOT_HEADER.unpack(fh.read(_SNAPSHOT_HEADER.size))
        probs = np.frombuffer(fh.read(), dtype="<f8")
    if probs.size != factorial(n):
        raise ValueError(f"snapshot length {probs.size} does not match n={n}")
    return n, t, probs
