"""Dyck paths, FFLV lattice points and Gelfand-Tsetlin pattern counts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .errors import IncompatibleRankError
from .lie_core import DominantWeight, PositiveRoot, _check_rank, positive_roots


@dataclass(frozen=True, order=True)
class DyckPath:
    steps: tuple[PositiveRoot, ...]

    @property
    def start(self) -> int:
        return self.steps[0].i

    @property
    def end(self) -> int:
        return self.steps[-1].j

    def is_valid(self) -> bool:
        if not self.steps or not self.steps[0].is_simple or not self.steps[-1].is_simple:
            return False
        for a, b in zip(self.steps, self.steps[1:]):
            if b not in ((a.i, a.j + 1), (a.i + 1, a.j)):
                return False
        return self.start <= self.end


def dyck_paths(n: int) -> list[DyckPath]:
    _check_rank(n)
    found: list[DyckPath] = []

    def walk(path: list[PositiveRoot]) -> None:
        p, q = path[-1]
        if p == q:
            found.append(DyckPath(tuple(path)))
        for nxt in ((p, q + 1), (p + 1, q)):
            if nxt[0] <= nxt[1] <= n - 1:
                path.append(PositiveRoot(*nxt))
                walk(path)
                path.pop()

    for i in range(1, n):
        walk([PositiveRoot(i, i)])
    return sorted(found)


@dataclass(frozen=True, order=True)
class MultiExponent:
    """Nonnegative integers indexed by ``positive_roots(n)`` in lexicographic order."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_rank(self.n)
        if len(self.values) != self.n * (self.n - 1) // 2:
            raise IncompatibleRankError(
                f"sl_{self.n} multiexponent needs {self.n * (self.n - 1) // 2} entries"
            )
        if any(v < 0 for v in self.values):
            raise ValueError(f"multiexponent entries must be nonnegative: {self.values}")

    @classmethod
    def zero(cls, n: int) -> MultiExponent:
        return cls(n, (0,) * (n * (n - 1) // 2))

    @classmethod
    def from_mapping(cls, n: int, s: dict[tuple[int, int], int]) -> MultiExponent:
        return cls(n, tuple(s.get(tuple(r), 0) for r in positive_roots(n)))

    def __getitem__(self, root: tuple[int, int]) -> int:
        i, j = root
        # offset of row i in the lexicographic root list, then column shift
        return self.values[(i - 1) * self.n - (i - 1) * i // 2 + (j - i)]

    def as_dict(self) -> dict[PositiveRoot, int]:
        return dict(zip(positive_roots(self.n), self.values))

    def __add__(self, other: MultiExponent) -> MultiExponent:
        if self.n != other.n:
            raise IncompatibleRankError(f"cannot add sl_{self.n} and sl_{other.n} multiexponents")
        return MultiExponent(self.n, tuple(a + b for a, b in zip(self.values, other.values)))


def fflv_lattice_points(weight: DominantWeight) -> list[MultiExponent]:
    """All points of S(lambda), sorted.

    Depth-first over roots in lexicographic order. Each path keeps a running
    budget; a coordinate may take any value up to the smallest remaining
    budget over the paths through its root.
    """
    n = weight.n
    roots = positive_roots(n)
    paths = dyck_paths(n)
    budgets = [weight.coefficient_sum(p.start, p.end) for p in paths]
    through = [
        [k for k, p in enumerate(paths) if root in p.steps] for root in roots
    ]
    out: list[MultiExponent] = []
    point = [0] * len(roots)

    def fill(pos: int) -> None:
        if pos == len(roots):
            out.append(MultiExponent(n, tuple(point)))
            return
        ks = through[pos]
        cap = min(budgets[k] for k in ks)
        for v in range(cap + 1):
            point[pos] = v
            for k in ks:
                budgets[k] -= v
            fill(pos + 1)
            for k in ks:
                budgets[k] += v
        point[pos] = 0

    fill(0)
    return out


def minkowski_sum(
    first: Iterable[MultiExponent], second: Iterable[MultiExponent]
) -> list[MultiExponent]:
    first, second = list(first), list(second)
    ranks = {s.n for s in first} | {t.n for t in second}
    if len(ranks) > 1:
        raise IncompatibleRankError(f"multiexponents over different ranks: {sorted(ranks)}")
    return sorted({s + t for s, t in product(first, second)})


def pbw_weight(s: MultiExponent) -> int:
    n = s.n
    return sum((j - i + 1) * (n - j) * v for (i, j), v in zip(positive_roots(n), s.values))


def _gt_rows_below(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    ranges = [range(row[b + 1], row[b] + 1) for b in range(len(row) - 1)]
    return product(*ranges)


@lru_cache(maxsize=None)
def _gt_count_from(row: tuple[int, ...]) -> int:
    if len(row) == 1:
        return 1
    return sum(_gt_count_from(below) for below in _gt_rows_below(row))


def gt_pattern_count(weight: DominantWeight) -> int:
    return _gt_count_from(weight.partition() + (0,))


def gt_patterns(weight: DominantWeight) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every GT pattern as a tuple of rows, top row first."""

    def expand(rows: tuple[tuple[int, ...], ...]):
        if len(rows[-1]) == 1:
            yield rows
            return
        for below in _gt_rows_below(rows[-1]):
            yield from expand(rows + (below,))

    yield from expand((weight.partition() + (0,),))
