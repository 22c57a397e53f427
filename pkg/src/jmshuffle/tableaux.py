"""Standard Young tableaux and the diagonal statistics of their top values.

The two insertion tableaux (row-major and column-major fillings) extremize
the k-diagonal index over all standard tableaux of a shape, which is what
turns per-tableau eigenvalues into per-shape bounds.
"""

from __future__ import annotations

from typing import Iterator

from .errors import check_capacity
from .partitions import Partition, diag_index, dim_syt

DEFAULT_SYT_CAP = 10**6


class StandardYoungTableau:
    """A bijective filling of a Young diagram, increasing along rows and columns.

    Cells are addressed 1-based as (row, column) so the content of the box
    holding value v is column - row.
    """

    __slots__ = ("_rows", "_shape", "_pos")

    def __init__(self, rows: list[list[int]] | tuple[tuple[int, ...], ...]):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        shape = Partition(len(r) for r in rows) if rows else Partition(())
        n = shape.n
        pos: dict[int, tuple[int, int]] = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if not 1 <= v <= n or v in pos:
                    raise ValueError(f"entries must be a bijection onto 1..{n}")
                if j and rows[i][j - 1] >= v:
                    raise ValueError("rows must be strictly increasing")
                if i and rows[i - 1][j] >= v:
                    raise ValueError("columns must be strictly increasing")
                pos[v] = (i + 1, j + 1)
        self._rows = rows
        self._shape = shape
        self._pos = pos

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def shape(self) -> Partition:
        return self._shape

    @property
    def n(self) -> int:
        return self._shape.n

    def position_of(self, value: int) -> tuple[int, int]:
        """1-based (row, column) of the box holding `value`."""
        return self._pos[value]

    def transpose(self) -> "StandardYoungTableau":
        conj = self._shape.transpose()
        rows = [[0] * conj[i] for i in range(conj.height)]
        for i, row in enumerate(self._rows):
            for j, v in enumerate(row):
                rows[j][i] = v
        return StandardYoungTableau(rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardYoungTableau) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"StandardYoungTableau{self._rows}"


def row_insertion_tableau(shape: Partition) -> StandardYoungTableau:
    """Fill 1..n row by row, left to right, top row first."""
    rows = []
    nxt = 1
    for length in shape.parts:
        rows.append(list(range(nxt, nxt + length)))
        nxt += length
    return StandardYoungTableau(rows)


def column_insertion_tableau(shape: Partition) -> StandardYoungTableau:
    """Fill 1..n column by column, top to bottom, leftmost column first."""
    conj = shape.transpose()
    rows = [[0] * shape[i] for i in range(shape.height)]
    nxt = 1
    for c in range(shape.width):
        for r in range(conj[c]):
            rows[r][c] = nxt
            nxt += 1
    return StandardYoungTableau(rows)


def k_diagonal_index(tableau: StandardYoungTableau, k: int) -> int:
    """Sum of contents j - i over the boxes holding the top k values."""
    n = tableau.n
    if not 0 <= k <= n:
        raise ValueError(f"k must be in [0, {n}], got {k}")
    total = 0
    for v in range(n - k + 1, n + 1):
        i, j = tableau.position_of(v)
        total += j - i
    return total


def shifted_k_diagonal_index(tableau: StandardYoungTableau, k: int) -> int:
    """k * width - k_diagonal_index, the shifted form used for lower bounds."""
    return k * tableau.shape.width - k_diagonal_index(tableau, k)


def enumerate_syt(shape: Partition, cap: int = DEFAULT_SYT_CAP) -> Iterator[StandardYoungTableau]:
    """All standard tableaux of `shape`, lexicographic by the position
    sequence of values 1..n (positions ordered (row, column))."""
    count = dim_syt(shape)
    check_capacity(count <= cap, f"enumerate_syt: {count} tableaux exceed cap {cap}")
    parts = shape.parts
    n = shape.n

    def rec(filled: list[list[int]], heights: list[int], value: int) -> Iterator[StandardYoungTableau]:
        if value > n:
            yield StandardYoungTableau(filled)
            return
        for i in range(len(parts)):
            j = heights[i]
            if j < parts[i] and (i == 0 or heights[i - 1] > j):
                filled[i].append(value)
                heights[i] += 1
                yield from rec(filled, heights, value + 1)
                heights[i] -= 1
                filled[i].pop()

    if n == 0:
        yield StandardYoungTableau(())
        return
    yield from rec([[] for _ in parts], [0] * len(parts), 1)


def restrict_to_pair(tableau: StandardYoungTableau, k: int) -> tuple[Partition, Partition]:
    """(shape, shape of the entries <= n-k); the inner shape is the
    partition left after deleting the boxes holding the top k values."""
    n = tableau.n
    if not 0 <= k <= n:
        raise ValueError(f"k must be in [0, {n}], got {k}")
    counts = [0] * tableau.shape.height
    for v in range(1, n - k + 1):
        i, _ = tableau.position_of(v)
        counts[i - 1] += 1
    inner = tuple(c for c in counts if c)
    return tableau.shape, Partition(inner)
