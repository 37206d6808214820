"""PBW semistandard tableaux.

A filling ``T`` of a Young diagram with column lengths ``mu`` is PBW
semistandard when

1. ``T[i,j] <= mu_j`` forces ``T[i,j] == i``;
2. for rows ``i1 < i2`` of column ``j`` with ``T[i1,j] != i1``, ``T[i1,j] > T[i2,j]``;
3. for ``j > 1`` every ``T[i,j]`` is bounded by some ``T[i1,j-1]`` with ``i1 >= i``.

Row index ``i1`` in (3) ranges over rows actually present in column ``j-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import InvalidEntryError
from .lie_core import DominantWeight, YoungShape, shape_of


@dataclass(frozen=True, order=True)
class PBWTableau:
    n: int
    shape: YoungShape
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        lengths = tuple(len(c) for c in self.columns)
        if lengths != self.shape.column_lengths:
            raise InvalidEntryError(f"columns {lengths} do not fit shape {self.shape.column_lengths}")

    def entry(self, i: int, j: int) -> int:
        return self.columns[j - 1][i - 1]

    def rows(self) -> list[list[int]]:
        height = self.shape.column_lengths[0] if self.columns else 0
        return [[c[i] for c in self.columns if len(c) > i] for i in range(height)]


def _column_ok(col: tuple[int, ...]) -> bool:
    mu = len(col)
    for i, t in enumerate(col, 1):
        if t <= mu and t != i:
            return False
    for i1 in range(mu):
        if col[i1] != i1 + 1 and any(col[i1] <= col[i2] for i2 in range(i1 + 1, mu)):
            return False
    return True


def _adjacent_ok(left: tuple[int, ...], right: tuple[int, ...]) -> bool:
    return all(max(left[i:]) >= t for i, t in enumerate(right))


def is_pbw_semistandard(tableau: PBWTableau) -> bool:
    n = tableau.n
    for col in tableau.columns:
        for t in col:
            if not 1 <= t <= n:
                raise InvalidEntryError(f"entry {t} outside 1..{n}")
    if not all(_column_ok(c) for c in tableau.columns):
        return False
    return all(_adjacent_ok(a, b) for a, b in zip(tableau.columns, tableau.columns[1:]))


@lru_cache(maxsize=None)
def pbw_columns(n: int, length: int) -> tuple[tuple[int, ...], ...]:
    """All single columns of the given length allowed by conditions (1) and (2)."""
    # condition (1) pins every small entry to its row
    choices = [[i] + list(range(length + 1, n + 1)) for i in range(1, length + 1)]
    return tuple(sorted(c for c in product(*choices) if _column_ok(c)))


def enumerate_pbw_tableaux(weight: DominantWeight) -> list[PBWTableau]:
    """All PBW semistandard tableaux of the shape of ``weight``.

    The zero weight yields a single empty tableau.
    """
    n = weight.n
    shape = shape_of(weight)
    out: list[PBWTableau] = []

    def extend(cols: list[tuple[int, ...]]) -> None:
        j = len(cols)
        if j == len(shape.column_lengths):
            out.append(PBWTableau(n, shape, tuple(cols)))
            return
        for c in pbw_columns(n, shape.column_lengths[j]):
            if j == 0 or _adjacent_ok(cols[-1], c):
                cols.append(c)
                extend(cols)
                cols.pop()

    extend([])
    return out
