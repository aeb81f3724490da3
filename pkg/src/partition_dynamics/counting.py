"""Counting partitions into exactly two distinct part values.

Four routes to ``p(2, n)``: the depth-sum formula with divisor weights,
Kim's divisor-convolution formula, brute-force enumeration, and (for the
coprime part only) the Farey count ``p_F(2, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from sympy import divisor_sigma as _divisor_sigma
from sympy import divisors, totient as _totient

from .extended_farey import orbit_generations
from .farey import fast_depth
from .partitions import Partition, iter_partitions

METHODS = ("formula", "kim", "brute", "farey")


def _check_n(n: int, least: int) -> None:
    if n < least:
        raise ValueError(f"n must be >= {least}, got {n}")


def totient(n: int) -> int:
    _check_n(n, 1)
    return int(_totient(n))


def divisor_sigma(j: int, n: int) -> int:
    """Sum of ``d**j`` over the divisors ``d`` of ``n``."""
    _check_n(n, 1)
    if j not in (0, 1):
        raise ValueError("only sigma_0 and sigma_1 are needed here")
    return int(_divisor_sigma(n, j))


def pF2(n: int) -> int:
    """Number of two-part partitions of ``n`` reached from reduced fractions."""
    _check_n(n, 2)
    total = sum(fast_depth(r, n) for r in range(1, n) if gcd(r, n) == 1)
    return (total - totient(n)) // 2


def p2_formula(n: int) -> int:
    _check_n(n, 2)
    total = sum((fast_depth(r, n) - 1) * divisor_sigma(0, gcd(r, n)) for r in range(1, n))
    if total % 2:
        raise AssertionError(f"odd depth sum for n={n}")  # pragma: no cover
    return total // 2


def p2_kim(n: int) -> int:
    _check_n(n, 2)
    s0 = [0] + [divisor_sigma(0, i) for i in range(1, n + 1)]
    conv = sum(s0[r] * s0[n - r] for r in range(1, n))
    return (conv - divisor_sigma(1, n) + s0[n]) // 2


def p2_brute(n: int) -> int:
    _check_n(n, 2)
    return sum(1 for _ in iter_partitions(n, distinct_parts=2))


@dataclass(frozen=True)
class CoverEntry:
    r: int
    e: int
    root: Partition
    partitions: tuple[Partition, ...]


def orbit_cover_decomposition(n: int) -> list[CoverEntry]:
    """Orbits of ``(n/e, r/e) x [e, 0]`` for ``1 <= r <= n/2`` and ``e | gcd(r, n)``.

    Together they cover every two-part partition of ``n`` exactly once.
    """
    _check_n(n, 2)
    out = []
    for r in range(1, n // 2 + 1):
        for e in divisors(gcd(r, n)):
            e = int(e)
            gens = orbit_generations(n // e, r // e, e)
            out.append(CoverEntry(r, e, Partition((n // e, r // e), (e, 0)), tuple(gens)))
    return out


@dataclass(frozen=True)
class CountReport:
    n: int
    values: dict[str, int]
    witness: dict[int, int] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        """formula, kim and brute coincide (whichever of them were computed)."""
        vals = {self.values[m] for m in ("formula", "kim", "brute") if m in self.values}
        return len(vals) <= 1

    @property
    def farey_complete(self) -> bool | None:
        """Whether the Farey count reaches every two-part partition."""
        ref = next((self.values[m] for m in ("brute", "formula", "kim") if m in self.values), None)
        if "farey" not in self.values or ref is None:
            return None
        return self.values["farey"] == ref

    def to_dict(self) -> dict:
        out = {"n": self.n, **self.values, "agree": self.agree}
        if self.farey_complete is not None:
            out["farey_complete"] = self.farey_complete
        if self.witness:
            out["witness"] = {str(r): v for r, v in self.witness.items()}
        return out


_FUNCS = {"formula": p2_formula, "kim": p2_kim, "brute": p2_brute, "farey": pF2}


def count_report(n: int, methods=METHODS, witness: bool = False) -> CountReport:
    unknown = set(methods) - set(METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}")
    values = {m: _FUNCS[m](n) for m in METHODS if m in methods}
    terms = {}
    if witness:
        terms = {r: (fast_depth(r, n) - 1) * divisor_sigma(0, gcd(r, n)) for r in range(1, n)}
    return CountReport(n, values, terms)
