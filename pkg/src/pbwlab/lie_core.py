"""Positive roots, dominant weights and Young shapes for sl_n.

Roots are 1-based pairs ``(i, j)`` standing for ``alpha_i + ... + alpha_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import NamedTuple

from .errors import InvalidRankError


class PositiveRoot(NamedTuple):
    i: int
    j: int

    @property
    def is_simple(self) -> bool:
        return self.i == self.j

    @property
    def height(self) -> int:
        return self.j - self.i + 1

    def __str__(self) -> str:
        return f"a{self.i}{self.j}" if self.j < 10 else f"a{self.i},{self.j}"


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise InvalidRankError(f"rank parameter must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class DominantWeight:
    """``m[0]*omega_1 + ... + m[n-2]*omega_{n-1}`` for sl_n."""

    n: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_rank(self.n)
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if len(self.m) != self.n - 1:
            raise InvalidRankError(
                f"sl_{self.n} weight needs {self.n - 1} coefficients, got {len(self.m)}"
            )
        if any(x < 0 for x in self.m):
            raise InvalidRankError(f"weight coefficients must be nonnegative: {self.m}")

    @classmethod
    def fundamental(cls, n: int, k: int) -> DominantWeight:
        _check_rank(n)
        if not 1 <= k <= n - 1:
            raise InvalidRankError(f"no fundamental weight omega_{k} for sl_{n}")
        return cls(n, tuple(int(i == k) for i in range(1, n)))

    @classmethod
    def zero(cls, n: int) -> DominantWeight:
        return cls(n, (0,) * (n - 1))

    def coefficient_sum(self, i: int, j: int) -> int:
        """m_i + ... + m_j (1-based, inclusive)."""
        return sum(self.m[i - 1 : j])

    def partition(self) -> tuple[int, ...]:
        """lambda_i = m_i + ... + m_{n-1}, for i = 1..n-1."""
        return tuple(sum(self.m[i:]) for i in range(self.n - 1))

    def __add__(self, other: DominantWeight) -> DominantWeight:
        if self.n != other.n:
            raise InvalidRankError(f"cannot add weights of sl_{self.n} and sl_{other.n}")
        return DominantWeight(self.n, tuple(a + b for a, b in zip(self.m, other.m)))

    def __le__(self, other: DominantWeight) -> bool:
        return self.n == other.n and all(a <= b for a, b in zip(self.m, other.m))


@dataclass(frozen=True)
class YoungShape:
    column_lengths: tuple[int, ...]

    @property
    def num_boxes(self) -> int:
        return sum(self.column_lengths)

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes (row, column), column by column."""
        return [(i, j) for j, mu in enumerate(self.column_lengths, 1) for i in range(1, mu + 1)]

    def to_weight(self, n: int) -> DominantWeight:
        return DominantWeight(n, tuple(self.column_lengths.count(i) for i in range(1, n)))


def positive_roots(n: int) -> list[PositiveRoot]:
    _check_rank(n)
    return [PositiveRoot(i, j) for i in range(1, n) for j in range(i, n)]


def weyl_dim(weight: DominantWeight) -> int:
    num = prod(weight.coefficient_sum(r.i, r.j) + r.height for r in positive_roots(weight.n))
    den = prod(r.height for r in positive_roots(weight.n))
    q, rem = divmod(num, den)
    assert rem == 0, "Weyl product must be integral"
    return q


def shape_of(weight: DominantWeight) -> YoungShape:
    lam = weight.partition()
    width = lam[0] if lam else 0
    return YoungShape(tuple(sum(1 for part in lam if part >= c) for c in range(1, width + 1)))

