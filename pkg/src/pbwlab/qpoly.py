"""Integer polynomials in one variable ``q``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


@dataclass(frozen=True)
class QPolynomial:
    """Coefficients indexed by power of q, trailing zeros stripped."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> QPolynomial:
        if power < 0:
            raise ValueError(f"negative power {power}")
        return cls((0,) * power + (coefficient,))

    @classmethod
    def one(cls) -> QPolynomial:
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __add__(self, other: QPolynomial) -> QPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(tuple(self[k] + other[k] for k in range(size)))

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, x in enumerate(self.coeffs):
            if x:
                for b, y in enumerate(other.coeffs):
                    out[a + b] += x * y
        return QPolynomial(tuple(out))

    def shift(self, power: int) -> QPolynomial:
        """Multiply by q**power."""
        if power < 0:
            raise ValueError(f"negative power {power}")
        if self.is_zero():
            return self
        return QPolynomial((0,) * power + self.coeffs)

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms)


def qsum(polys: Iterable[QPolynomial]) -> QPolynomial:
    total = QPolynomial()
    for p in polys:
        total = total + p
    return total


@lru_cache(maxsize=None)
def q_binomial(m: int, k: int) -> QPolynomial:
    """Gaussian binomial [m choose k]_q by the Pascal rule; zero outside 0 <= k <= m."""
    if k < 0 or m < 0 or k > m:
        return QPolynomial()
    if k == 0 or k == m:
        return QPolynomial.one()
    return q_binomial(m - 1, k - 1) + q_binomial(m - 1, k).shift(k)
