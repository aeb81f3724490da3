"""Partitions in parts/multiplicities form, Young shapes and conjugation.

A partition ``(n1^k1, ..., nm^km)`` is stored as ``Partition(parts, mults)``.
Dynamical maps sometimes produce "raw" states that are not canonical:
zero multiplicities (roots such as ``(19, 8) x [1, 0]``) or repeated parts
(the Farey endpoint ``(1, 1) x [12, 7]``).  Both are allowed in storage;
:meth:`Partition.canonical` merges them away.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from math import isqrt
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    mults: tuple[int, ...]

    def __init__(self, parts: Iterable[int], mults: Iterable[int]):
        parts = tuple(int(n) for n in parts)
        mults = tuple(int(k) for k in mults)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if len(parts) != len(mults):
            raise ValueError(f"{len(parts)} parts but {len(mults)} multiplicities")
        if parts[-1] < 1 or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be positive and non-increasing: {parts}")
        if any(k < 0 for k in mults):
            raise ValueError(f"multiplicities must be nonnegative: {mults}")
        if not any(mults):
            raise ValueError("a partition needs a nonzero multiplicity")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "mults", mults)

    @property
    def m(self) -> int:
        """Number of stored entries (the dimension the maps act on)."""
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(n * k for n, k in zip(self.parts, self.mults))

    @property
    def strict(self) -> bool:
        """True when the parts are strictly decreasing."""
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    @property
    def is_canonical(self) -> bool:
        return self.strict and all(self.mults)

    def canonical(self) -> "Partition":
        return canonicalize(self.parts, self.mults)

    def expanded(self) -> tuple[int, ...]:
        """The non-increasing list of all parts, repeated by multiplicity."""
        return tuple(n for n, k in zip(self.parts, self.mults) for _ in range(k))

    def scaled(self, d: int = 1, e: int = 1) -> "Partition":
        return Partition((d * n for n in self.parts), (e * k for k in self.mults))

    def to_dict(self) -> dict:
        return {"parts": list(self.parts), "mults": list(self.mults)}

    @classmethod
    def from_dict(cls, data: dict) -> "Partition":
        return cls(data["parts"], data["mults"])

    def __str__(self) -> str:
        parts = ",".join(map(str, self.parts))
        mults = ",".join(map(str, self.mults))
        return f"({parts}) x [{mults}]"


def canonicalize(parts: Sequence[int], mults: Sequence[int]) -> Partition:
    """Drop zero multiplicities and merge equal parts.

    Accepts parts in any order; the result has strictly decreasing parts.
    """
    merged: dict[int, int] = {}
    for n, k in zip(parts, mults):
        if k < 0:
            raise ValueError(f"negative multiplicity {k}")
        if k:
            merged[n] = merged.get(n, 0) + k
    if not merged:
        raise ValueError("empty partition")
    keys = sorted(merged, reverse=True)
    return Partition(keys, (merged[n] for n in keys))


def from_parts_list(expanded: Iterable[int]) -> Partition:
    """Build a partition from a plain list such as ``[5, 5, 3, 1]``."""
    expanded = list(expanded)
    return canonicalize(expanded, [1] * len(expanded))


def weight(lam: Partition) -> int:
    return lam.weight


def young_shape(lam: Partition) -> tuple[int, ...]:
    """Row lengths, top to bottom."""
    return lam.canonical().expanded()


def transpose_shape(rows: Sequence[int]) -> tuple[int, ...]:
    if not rows:
        return ()
    return tuple(sum(1 for r in rows if r > j) for j in range(rows[0]))


def conjugate_raw(lam: Partition) -> Partition:
    """Entry-by-entry conjugation formula, without any merging.

    ``(n1..nm) x [k1..km]`` goes to
    ``(k1+..+km, ..., k1+k2, k1) x [nm, n(m-1)-nm, ..., n1-n2]``.  Zero
    multiplicities in the input produce repeated parts in the output.
    This is the form the palindrome statements are phrased in.
    """
    if lam.mults[0] == 0:
        raise ValueError(f"raw conjugation needs k1 >= 1, got {lam}")
    sums = list(accumulate(lam.mults))
    parts = sums[::-1]
    n = lam.parts
    mults = [n[-1]] + [n[i - 1] - n[i] for i in range(len(n) - 1, 0, -1)]
    return Partition(parts, mults)


def conjugate(lam: Partition) -> Partition:
    """Conjugate partition, returned in canonical form."""
    if not lam.is_canonical:
        lam = lam.canonical()
    return conjugate_raw(lam).canonical()


def render_shape(rows: Sequence[int], cell: str = "[]") -> str:
    return "\n".join(cell * r for r in rows)


def format_exponent(lam: Partition) -> str:
    """Exponent notation such as ``(5^2,3,1^4)``; multiplicity 1 is omitted."""
    lam = lam.canonical()
    return "(" + ",".join(
        str(n) if k == 1 else f"{n}^{k}" for n, k in zip(lam.parts, lam.mults)
    ) + ")"


def iter_partitions(n: int, distinct_parts: int | None = None) -> Iterator[Partition]:
    """Yield partitions of ``n`` in lexicographically decreasing order.

    With ``distinct_parts=m`` only partitions with exactly ``m`` distinct
    part values are produced; the search prunes rather than filters.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if distinct_parts is not None and distinct_parts < 1:
        raise ValueError("distinct_parts must be >= 1")

    parts: list[int] = []
    mults: list[int] = []

    def rec(remaining: int, max_part: int, left: int | None) -> Iterator[Partition]:
        if remaining == 0:
            if left is None or left == 0:
                yield Partition(parts, mults)
            return
        if left == 0:
            return
        # the smallest possible sum of `left` distinct parts is 1+2+..+left
        if left is not None and left * (left + 1) // 2 > remaining:
            return
        if left == 1:
            # one value left: it must be a divisor of what remains
            for part in _divisors_desc(remaining, max_part):
                yield Partition([*parts, part], [*mults, remaining // part])
            return
        for part in range(min(max_part, remaining), 0, -1):
            if left is not None and left * (left + 1) // 2 > remaining:
                break
            parts.append(part)
            for k in range(remaining // part, 0, -1):
                mults.append(k)
                yield from rec(remaining - k * part, part - 1, None if left is None else left - 1)
                mults.pop()
            parts.pop()

    yield from rec(n, n, distinct_parts)


def _divisors_desc(n: int, limit: int) -> list[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    found = set(small) | {n // d for d in small}
    return sorted((d for d in found if d <= limit), reverse=True)


def enumerate_partitions(n: int, distinct_parts: int | None = None) -> list[Partition]:
    return list(iter_partitions(n, distinct_parts))


def partition_count(n: int) -> int:
    """p(n) by the usual coin-change recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def partition_count_pentagonal(n: int) -> int:
    """p(n) through Euler's pentagonal number recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p = [1] + [0] * n
    for i in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > i:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[i - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= i:
                total += sign * p[i - g2]
            j += 1
        p[i] = total
    return p[n]
