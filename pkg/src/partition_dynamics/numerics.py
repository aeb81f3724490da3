"""Exact integer helpers and small dense integer matrices.

Everything here works on Python ints, so there is no overflow anywhere.
Matrices are immutable tuples of rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers.

    ``gcd(0, 0)`` is rejected rather than returning 0.
    """
    if a < 0 or b < 0:
        raise ValueError(f"gcd expects nonnegative integers, got ({a}, {b})")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class IntMat:
    """Square matrix of exact integers, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("IntMat must be a non-empty square matrix")
        object.__setattr__(self, "rows", rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, dim: int) -> "IntMat":
        return cls([[int(i == j) for j in range(dim)] for i in range(dim)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if isinstance(other, IntMat):
            return mat_mul(self, other)
        return mat_vec(self, other)

    def transpose(self) -> "IntMat":
        return IntMat(zip(*self.rows))

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    def det(self) -> int:
        return det(self)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        return f"IntMat({self.tolist()})"


def mat_mul(a: IntMat, b: IntMat) -> IntMat:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    cols = b.columns()
    return IntMat([[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a.rows])


def mat_vec(a: IntMat, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != a.dim:
        raise ValueError(f"dimension mismatch: matrix {a.dim}, vector {len(v)}")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a.rows)


def mat_product(mats: Iterable[IntMat], dim: int) -> IntMat:
    """Left-to-right product of ``mats``; identity when empty."""
    out = IntMat.identity(dim)
    for m in mats:
        out = mat_mul(out, m)
    return out


def det(a: IntMat) -> int:
    # Bareiss elimination keeps every intermediate an exact integer.
    m = [list(r) for r in a.rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
