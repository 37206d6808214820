"""Representations of the equioriented type A quiver ``1 -> 2 -> ... -> n-1``.

A representation is stored by its Krull-Schmidt decomposition into interval
modules ``U_{i,j}`` (one-dimensional on vertices ``i..j``, identity arrows
inside the interval).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod
from typing import Iterator, Mapping, Sequence

from .errors import (
    IncompatibleRankError,
    InvalidDimensionError,
    InvalidFieldError,
    InvalidRankError,
    NotRealizableError,
    ResourceLimitError,
)
from .lie_core import _check_rank
from .qpoly import q_binomial

MAX_GRASSMANNIAN_PRODUCT = 10**7
MAX_FIELD_SIZE = 7

Interval = tuple[int, int]


def intervals(n: int) -> list[Interval]:
    _check_rank(n)
    return [(i, j) for i in range(1, n) for j in range(i, n)]


@dataclass(frozen=True)
class QuiverRep:
    n: int
    mult: tuple[tuple[Interval, int], ...]

    def __post_init__(self) -> None:
        _check_rank(self.n)
        merged: dict[Interval, int] = {}
        for (i, j), c in self.mult:
            if not 1 <= i <= j <= self.n - 1:
                raise InvalidDimensionError(f"interval {(i, j)} outside vertices 1..{self.n - 1}")
            if c < 0:
                raise NotRealizableError(f"negative multiplicity {c} for U_{(i, j)}")
            merged[(i, j)] = merged.get((i, j), 0) + c
        object.__setattr__(
            self, "mult", tuple(sorted((k, c) for k, c in merged.items() if c > 0))
        )

    @classmethod
    def from_dict(cls, n: int, mult: Mapping[Interval, int]) -> QuiverRep:
        return cls(n, tuple((tuple(k), c) for k, c in mult.items()))

    def multiplicity(self, i: int, j: int) -> int:
        return dict(self.mult).get((i, j), 0)

    def summands(self) -> list[Interval]:
        """Indecomposable summands with repetition, lexicographic."""
        return [k for k, c in self.mult for _ in range(c)]

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(
            sum(c for (i, j), c in self.mult if i <= v <= j) for v in range(1, self.n)
        )

    def __add__(self, other: QuiverRep) -> QuiverRep:
        if self.n != other.n:
            raise IncompatibleRankError("direct sum of representations of different quivers")
        return QuiverRep(self.n, self.mult + other.mult)

    def __str__(self) -> str:
        if not self.mult:
            return "0"
        return " + ".join(
            (f"{c}*" if c > 1 else "") + f"U{i},{j}" for (i, j), c in self.mult
        )


@dataclass(frozen=True)
class RankTuple:
    """Ranks ``r[i,j]`` of the composed arrows from vertex i to vertex j."""

    n: int
    ranks: tuple[tuple[Interval, int], ...]

    def __getitem__(self, key: Interval) -> int:
        i, j = key
        if not 1 <= i <= j <= self.n - 1:
            return 0
        return dict(self.ranks)[(i, j)]

    def as_dict(self) -> dict[Interval, int]:
        return dict(self.ranks)

    @classmethod
    def from_dict(cls, n: int, ranks: Mapping[Interval, int]) -> RankTuple:
        return cls(n, tuple((k, int(ranks.get(k, 0))) for k in intervals(n)))


def euler_form(n: int, e: Sequence[int], d: Sequence[int]) -> int:
    _check_rank(n)
    if len(e) != n - 1 or len(d) != n - 1:
        raise InvalidDimensionError(
            f"dimension vectors must have length {n - 1}, got {len(e)} and {len(d)}"
        )
    return sum(a * b for a, b in zip(e, d)) - sum(e[v] * d[v + 1] for v in range(n - 2))


def projective(n: int, k: int) -> Interval:
    return (k, n - 1)


def injective(n: int, k: int) -> Interval:
    return (1, k)


def special_module(n: int, kind: str) -> QuiverRep:
    """``M0`` (n copies of P_1), ``M1`` (A + A*) or ``M2`` (P's, all but the last I, simples)."""
    _check_rank(n)
    kind = kind.upper()
    if kind == "M0":
        parts = [projective(n, 1)] * n
    elif kind == "M1":
        parts = [projective(n, k) for k in range(1, n)] + [injective(n, k) for k in range(1, n)]
    elif kind == "M2":
        parts = (
            [projective(n, k) for k in range(1, n)]
            + [injective(n, k) for k in range(1, n - 1)]
            + [(k, k) for k in range(1, n)]
        )
    else:
        raise ValueError(f"unknown special module {kind!r}; expected M0, M1 or M2")
    return QuiverRep(n, tuple((p, 1) for p in parts))


def rank_tuple(rep: QuiverRep) -> RankTuple:
    return RankTuple(
        rep.n,
        tuple(
            ((i, j), sum(c for (a, b), c in rep.mult if a <= i and b >= j))
            for i, j in intervals(rep.n)
        ),
    )


def module_from_rank_tuple(n: int, r: RankTuple | Mapping[Interval, int]) -> QuiverRep:
    if not isinstance(r, RankTuple):
        r = RankTuple.from_dict(n, r)
    if r.n != n:
        raise IncompatibleRankError(f"rank tuple for n={r.n} used with n={n}")
    mult = {}
    for i, j in intervals(n):
        m = r[i, j] - r[i - 1, j] - r[i, j + 1] + r[i - 1, j + 1]
        if m < 0:
            raise NotRealizableError(f"rank tuple gives multiplicity {m} for U_{i},{j}")
        mult[(i, j)] = m
    return QuiverRep.from_dict(n, mult)


def degenerates_to(m: QuiverRep, other: QuiverRep) -> bool:
    """True when ``other`` lies in the orbit closure of ``m`` (pointwise rank dominance)."""
    if m.n != other.n or m.dim_vector != other.dim_vector:
        raise IncompatibleRankError(
            f"degeneration needs equal dimension vectors: {m.dim_vector} vs {other.dim_vector}"
        )
    rm, ro = rank_tuple(m), rank_tuple(other)
    return all(rm[k] >= ro[k] for k in intervals(m.n))


# -- finite field point counts -------------------------------------------------


def fiber_basis(rep: QuiverRep, v: int) -> list[tuple[Interval, int]]:
    """Basis of the vector space at vertex v, ordered by (interval, copy)."""
    return [((i, j), c) for (i, j), k in rep.mult if i <= v <= j for c in range(k)]


def arrow_matrix(rep: QuiverRep, v: int) -> list[list[int]]:
    """Matrix of the arrow ``v -> v+1`` (rows index the target basis)."""
    src, dst = fiber_basis(rep, v), fiber_basis(rep, v + 1)
    return [[int(a == b) for a in src] for b in dst]


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class _Subspace:
    basis: tuple[tuple[int, ...], ...]
    points: frozenset[tuple[int, ...]]


def subspaces(d: int, k: int, p: int) -> Iterator[_Subspace]:
    """Every k-dimensional subspace of F_p^d, once each, via reduced row echelon forms."""
    if not 0 <= k <= d:
        return
    for pivots in combinations(range(d), k):
        free = [
            (r, c)
            for r, pc in enumerate(pivots)
            for c in range(pc + 1, d)
            if c not in pivots
        ]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * d for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), x in zip(free, values):
                rows[r][c] = x
            basis = tuple(tuple(row) for row in rows)
            points = frozenset(
                tuple(sum(a * row[t] for a, row in zip(coef, basis)) % p for t in range(d))
                for coef in product(range(p), repeat=k)
            )
            yield _Subspace(basis, points)


def count_subreps_Fq(rep: QuiverRep, e: Sequence[int], p: int) -> int:
    """Number of F_p-points of the quiver Grassmannian Gr_e(rep).

    Counts chains ``V_v`` of subspaces with ``dim V_v = e_v`` and each arrow
    mapping ``V_v`` into ``V_{v+1}``, summing backwards from the last vertex.
    """
    n = rep.n
    d = rep.dim_vector
    if len(e) != n - 1:
        raise InvalidDimensionError(f"dimension vector must have length {n - 1}, got {len(e)}")
    if not _is_prime(p):
        raise InvalidFieldError(f"field size {p} is not prime")
    if p > MAX_FIELD_SIZE:
        raise ResourceLimitError(f"field size {p} exceeds {MAX_FIELD_SIZE}")
    if any(x < 0 for x in e):
        raise InvalidDimensionError(f"negative entries in {tuple(e)}")
    if any(ev > dv for ev, dv in zip(e, d)):
        return 0
    size = prod(q_binomial(dv, ev)(p) for dv, ev in zip(d, e))
    if size > MAX_GRASSMANNIAN_PRODUCT:
        raise ResourceLimitError(
            f"{size} subspace tuples exceeds the limit {MAX_GRASSMANNIAN_PRODUCT}"
        )

    later = [(s, 1) for s in subspaces(d[-1], e[-1], p)]
    for v in range(n - 2, 0, -1):
        src, dst = fiber_basis(rep, v), fiber_basis(rep, v + 1)
        # target coordinate t copies source coordinate where[t], or is zero
        where = [src.index(b) if b in src else None for b in dst]

        def image(vec: tuple[int, ...]) -> tuple[int, ...]:
            return tuple(0 if w is None else vec[w] for w in where)

        current = []
        for sub in subspaces(d[v - 1], e[v - 1], p):
            imgs = [image(b) for b in sub.basis]
            ways = sum(c for w, c in later if all(x in w.points for x in imgs))
            if ways:
                current.append((sub, ways))
        later = current
    return sum(c for _, c in later)
