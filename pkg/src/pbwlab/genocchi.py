"""Flag-cell collections, Dellac configurations and median Genocchi numbers.

``h_n`` counts the torus-fixed cells of the PBW degenerate flag variety of
sl_n; ``h_n(q)`` is its Poincare polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import combinations, product
from math import comb, prod
from typing import Iterator

from .errors import InvalidRankError
from .qpoly import QPolynomial, q_binomial, qsum


def _check_n(n: int, minimum: int = 1) -> None:
    if not isinstance(n, int) or n < minimum:
        raise InvalidRankError(f"parameter n must be an integer >= {minimum}, got {n!r}")


@dataclass(frozen=True, order=True)
class FlagCollection:
    """Subsets ``(I_1, ..., I_{n-1})`` of ``{1..n}`` with ``|I_k| = k``, each sorted."""

    subsets: tuple[tuple[int, ...], ...]

    def is_admissible(self) -> bool:
        if any(len(s) != k for k, s in enumerate(self.subsets, 1)):
            return False
        return all(
            set(self.subsets[k - 1]) <= set(self.subsets[k]) | {k + 1}
            for k in range(1, len(self.subsets))
        )


def admissible_flag_collections(n: int) -> list[FlagCollection]:
    """Collections with ``I_k`` inside ``I_{k+1} + {k+1}``, built from ``I_{n-1}`` downward."""
    _check_n(n)
    if n == 1:
        return [FlagCollection(())]
    found: list[FlagCollection] = []

    def descend(k: int, chain: list[tuple[int, ...]]) -> None:
        if k == 0:
            found.append(FlagCollection(tuple(reversed(chain))))
            return
        pool = sorted(set(chain[-1]) | {k + 1})
        for sub in combinations(pool, k):
            chain.append(sub)
            descend(k - 1, chain)
            chain.pop()

    for top in combinations(range(1, n + 1), n - 1):
        descend(n - 2, [top])
    return sorted(found)


@dataclass(frozen=True, order=True)
class DellacConfig:
    """Boxes ``(column, row)`` of an n x 2n grid, stored sorted."""

    n: int
    boxes: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "boxes", tuple(sorted(tuple(b) for b in self.boxes)))

    def is_valid(self) -> bool:
        n = self.n
        cols = [l for l, _ in self.boxes]
        rows = sorted(j for _, j in self.boxes)
        return (
            all(cols.count(l) == 2 for l in range(1, n + 1))
            and len(cols) == 2 * n
            and rows == list(range(1, 2 * n + 1))
            and all(l <= j <= n + l for l, j in self.boxes)
        )

    def to_grid(self) -> str:
        """Text grid, first line = row 1, one character per column."""
        occupied = set(self.boxes)
        return "\n".join(
            "".join("X" if (l, j) in occupied else "." for l in range(1, self.n + 1))
            for j in range(1, 2 * self.n + 1)
        )

    @classmethod
    def from_grid(cls, text: str) -> DellacConfig:
        lines = [ln.strip() for ln in text.strip().splitlines()]
        n = len(lines[0])
        if len(lines) != 2 * n or any(len(ln) != n for ln in lines):
            raise ValueError(f"Dellac grid must be {2 * n} rows of {n} cells")
        boxes = [
            (l, j)
            for j, line in enumerate(lines, 1)
            for l, ch in enumerate(line, 1)
            if ch == "X"
        ]
        return cls(n, tuple(boxes))


def dellac_configs(n: int) -> list[DellacConfig]:
    """Row-by-row backtracking: row j goes to a column l with j-n <= l <= j."""
    _check_n(n)
    found: list[DellacConfig] = []
    used = [0] * (n + 1)
    boxes: list[tuple[int, int]] = []

    def place(j: int) -> None:
        if j > 2 * n:
            found.append(DellacConfig(n, tuple(boxes)))
            return
        for l in range(max(1, j - n), min(n, j) + 1):
            if used[l] < 2:
                used[l] += 1
                boxes.append((l, j))
                place(j + 1)
                boxes.pop()
                used[l] -= 1

    place(1)
    return sorted(found)


def dellac_length(config: DellacConfig) -> int:
    # boxes are sorted by column, so each pair is seen once with l1 <= l2
    return sum(
        1
        for (l1, j1), (l2, j2) in combinations(config.boxes, 2)
        if l1 < l2 and j1 > j2
    )


def _f_vectors(n: int, slack: int) -> Iterator[tuple[int, ...]]:
    """(f_0, ..., f_n) with f_0 = f_n = 0 and 0 <= f_k <= k + slack."""
    for inner in product(*(range(k + slack + 1) for k in range(1, n))):
        yield (0, *inner, 0)


def genocchi_closed(n: int, slack: int = 0) -> int:
    """Normalized median Genocchi number from the binomial-sum formula.

    Terms vanish once some ``f_k > 1 + f_{k-1}``, so summing ``f_k <= k`` is
    exact; ``slack`` widens the box for checking that claim. ``n = 0`` gives 1.
    """
    _check_n(n, minimum=0)
    if n == 0:
        return 1
    return sum(
        prod(comb(1 + f[k - 1], f[k]) for k in range(1, n + 1))
        * prod(comb(1 + f[k + 1], f[k]) for k in range(n))
        for f in _f_vectors(n, slack)
    )


def _fermionic_term(f: tuple[int, ...], n: int) -> QPolynomial:
    term = QPolynomial.one()
    for k in range(1, n + 1):
        term = term * q_binomial(1 + f[k - 1], f[k])
        if term.is_zero():
            return term
    for k in range(n):
        term = term * q_binomial(1 + f[k + 1], f[k])
        if term.is_zero():
            return term
    # nonvanishing terms have f_k <= k and f_k <= 1 + f_{k+1}, so the exponent is >= 0
    power = sum((k - f[k]) * (1 - f[k] + f[k + 1]) for k in range(1, n))
    return term.shift(power)


def genocchi_poly_fermionic(n: int, slack: int = 0) -> QPolynomial:
    _check_n(n)
    return qsum(_fermionic_term(f, n) for f in _f_vectors(n, slack))


def genocchi_poly_dellac(n: int) -> QPolynomial:
    _check_n(n)
    counts: dict[int, int] = {}
    for d in dellac_configs(n):
        k = dellac_length(d)
        counts[k] = counts.get(k, 0) + 1
    top = max(counts)
    return QPolynomial(tuple(counts.get(k, 0) for k in range(top + 1)))


def parse_dellac_fixture(text: str) -> list[DellacConfig]:
    blocks = [b for b in text.strip().split("\n\n") if b.strip()]
    return [DellacConfig.from_grid(b) for b in blocks]


def load_dc3_fixture() -> list[DellacConfig]:
    """The seven n = 3 configurations as drawn in the original figure."""
    text = resources.files("pbwlab").joinpath("data/dellac_n3.txt").read_text()
    return parse_dellac_fixture(text)
