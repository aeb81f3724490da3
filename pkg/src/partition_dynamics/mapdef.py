"""Piecewise-linear extended maps described by data.

A map of dimension ``m`` has a list of branches.  Branch ``b`` applies to
parts ``n`` when ``when_b . n > 0``; it then sends ``n`` to ``P_b n`` and
the multiplicities ``k`` to ``M_b k``.  When no branch applies strictly the
state is on a boundary.  Weight is preserved exactly when
``M_b^T P_b = I``.

Map files are TOML::

    name = "example"
    dim = 3
    [[branch]]
    label = "0"
    when = [-1, 1, 1]
    parts = [[0, 1, 0], [0, 0, 1], [1, -1, 0]]
    mults = [[1, 1, 0], [0, 0, 1], [1, 0, 0]]
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
import tomli

from .numerics import IntMat, mat_mul, mat_vec

BOUNDARY = "boundary"
NEGATIVE = "NEGATIVE"

_INT64_MAX = 2**63 - 1


class BoundaryError(ValueError):
    """The state sits on a boundary where no branch applies."""


@dataclass(frozen=True)
class SignedPartition:
    """Strictly decreasing positive parts with multiplicities of any sign."""

    parts: tuple[int, ...]
    mults: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(n * k for n, k in zip(self.parts, self.mults))

    @property
    def nonnegative(self) -> bool:
        return all(k >= 0 for k in self.mults)

    def to_dict(self) -> dict:
        return {"parts": list(self.parts), "mults": list(self.mults)}

    def __str__(self) -> str:
        parts = ",".join(map(str, self.parts))
        mults = ",".join(map(str, self.mults))
        return f"({parts}) x [{mults}]"


@dataclass(frozen=True)
class Branch:
    label: str
    when: tuple[int, ...]
    parts: IntMat
    mults: IntMat

    def applies(self, parts: Sequence[int]) -> bool:
        return sum(c * n for c, n in zip(self.when, parts)) > 0

    def weight_preserving(self) -> bool:
        return mat_mul(self.mults.transpose(), self.parts) == IntMat.identity(self.parts.dim)


@dataclass(frozen=True)
class MapDef:
    name: str
    dim: int
    branches: tuple[Branch, ...]

    def __post_init__(self):
        for b in self.branches:
            if len(b.when) != self.dim or b.parts.dim != self.dim or b.mults.dim != self.dim:
                raise ValueError(f"branch {b.label} of {self.name} has the wrong dimension")

    def branch(self, label: str) -> Branch:
        for b in self.branches:
            if b.label == label:
                return b
        raise KeyError(f"{self.name} has no branch {label!r}")

    def select(self, parts: Sequence[int]) -> Branch:
        for b in self.branches:
            if b.applies(parts):
                return b
        raise BoundaryError(f"{tuple(parts)} is on a boundary of {self.name}")

    def apply_branch(self, label: str, parts: Sequence[int], mults: Sequence[int]) -> SignedPartition:
        """Apply one branch's matrices without checking its predicate."""
        b = self.branch(label)
        return SignedPartition(mat_vec(b.parts, parts), mat_vec(b.mults, mults))

    def step(self, parts: Sequence[int], mults: Sequence[int]) -> tuple[str, SignedPartition]:
        if len(parts) != self.dim or len(mults) != self.dim:
            raise ValueError(f"{self.name} acts in dimension {self.dim}")
        b = self.select(parts)
        return b.label, SignedPartition(mat_vec(b.parts, parts), mat_vec(b.mults, mults))

    def to_toml(self) -> str:
        def row(v):
            return "[" + ", ".join(map(str, v)) + "]"

        lines = [f'name = "{self.name}"', f"dim = {self.dim}"]
        for b in self.branches:
            lines += [
                "",
                "[[branch]]",
                f'label = "{b.label}"',
                f"when = {row(b.when)}",
                "parts = [" + ", ".join(row(r) for r in b.parts.rows) + "]",
                "mults = [" + ", ".join(row(r) for r in b.mults.rows) + "]",
            ]
        return "\n".join(lines) + "\n"


def mapdef_from_dict(data: dict) -> MapDef:
    try:
        branches = tuple(
            Branch(str(b["label"]), tuple(int(c) for c in b["when"]), IntMat(b["parts"]), IntMat(b["mults"]))
            for b in data["branch"]
        )
        return MapDef(str(data["name"]), int(data["dim"]), branches)
    except KeyError as exc:
        raise ValueError(f"map definition is missing {exc}") from None


def loads_mapdef(text: str) -> MapDef:
    return mapdef_from_dict(tomli.loads(text))


def load_mapdef(path: str | Path) -> MapDef:
    return loads_mapdef(Path(path).read_text())


BUILTIN_MAPS = ("triangle", "monkemeyer", "cassaigne", "t12e12", "t13_12_12", "t132_12_e")


def builtin_mapdef(name: str) -> MapDef:
    if name not in BUILTIN_MAPS:
        raise KeyError(f"unknown map {name!r}; known: {', '.join(BUILTIN_MAPS)}")
    text = resources.files("partition_dynamics").joinpath("mapdefs").joinpath(f"{name}.toml").read_text()
    return loads_mapdef(text)


# ---------------------------------------------------------------------------
# Vectorised sweeps over many roots at once.


def strict_roots(dim: int, max_first: int, min_first: int | None = None) -> np.ndarray:
    """All ``n1 > n2 > ... > n_dim > 0`` with ``n1 <= max_first``, in ascending
    lexicographic order."""
    rows = []

    def rec(prefix: list[int], below: int, left: int):
        if left == 0:
            rows.append(list(prefix))
            return
        for v in range(left, below):
            prefix.append(v)
            rec(prefix, v, left - 1)
            prefix.pop()

    lo = dim if min_first is None else max(dim, min_first)
    for n1 in range(lo, max_first + 1):
        rec([n1], n1, dim - 1)
    return np.array(rows, dtype=np.int64).reshape(-1, dim)


def unit_mults(count: int, dim: int) -> np.ndarray:
    k = np.zeros((count, dim), dtype=np.int64)
    k[:, 0] = 1
    return k


@dataclass
class SweepResult:
    roots: np.ndarray
    steps: np.ndarray  # map applications performed per root
    reason: np.ndarray  # object array: BOUNDARY or NEGATIVE
    first_negative: dict[int, tuple]  # root index -> (step, label, parts, mults, out_parts, out_mults)


StepHook = Callable[[int, np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray], None]


def _row_norm(mats: np.ndarray) -> int:
    return int(np.abs(mats).sum(axis=2).max())


def _guard(limit: int, *arrays: np.ndarray) -> None:
    # checked before each step: |entry| <= limit keeps every row sum inside int64
    for a in arrays:
        if a.size and np.abs(a).max() > limit:
            raise OverflowError("int64 sweep would overflow; reduce the bound")


def sweep(
    mapdef: MapDef,
    roots: np.ndarray,
    mults: np.ndarray | None = None,
    hook: StepHook | None = None,
    max_steps: int | None = None,
    first_only: bool = False,
) -> SweepResult:
    """Iterate ``mapdef`` from every row of ``roots`` until each orbit hits a
    boundary or produces a negative multiplicity.

    ``hook(step, idx, parts, mults, new_parts, new_mults)`` sees every
    non-negative transition (``idx`` are root indices).  With
    ``first_only=True`` orbits of roots after the first root known to go
    negative are abandoned early.
    """
    roots = np.asarray(roots, dtype=np.int64)
    count = len(roots)
    parts = roots.copy()
    k = unit_mults(count, mapdef.dim) if mults is None else np.asarray(mults, dtype=np.int64).copy()
    when = np.array([b.when for b in mapdef.branches], dtype=np.int64)
    pmats = np.array([b.parts.rows for b in mapdef.branches], dtype=np.int64)
    mmats = np.array([b.mults.rows for b in mapdef.branches], dtype=np.int64)
    labels = [b.label for b in mapdef.branches]
    part_limit = _INT64_MAX // max(1, _row_norm(pmats))
    mult_limit = _INT64_MAX // max(1, _row_norm(mmats))

    steps = np.zeros(count, dtype=np.int64)
    reason = np.empty(count, dtype=object)
    first_negative: dict[int, tuple] = {}
    active = np.arange(count)
    step = 0
    while active.size:
        if max_steps is not None and step >= max_steps:
            reason[active] = "max_steps"
            break
        n, kk = parts[active], k[active]
        _guard(part_limit, n)
        _guard(mult_limit, kk)
        scores = n @ when.T
        positive = scores > 0
        has = positive.any(axis=1)
        reason[active[~has]] = BOUNDARY
        active, n, kk = active[has], n[has], kk[has]
        choice = positive[has].argmax(axis=1)
        new_n = np.empty_like(n)
        new_k = np.empty_like(kk)
        for b in range(len(labels)):
            sel = choice == b
            new_n[sel] = n[sel] @ pmats[b].T
            new_k[sel] = kk[sel] @ mmats[b].T
        neg = (new_k < 0).any(axis=1)
        for i in np.nonzero(neg)[0]:
            r = int(active[i])
            first_negative[r] = (
                step,
                labels[choice[i]],
                tuple(int(v) for v in n[i]),
                tuple(int(v) for v in kk[i]),
                tuple(int(v) for v in new_n[i]),
                tuple(int(v) for v in new_k[i]),
            )
        reason[active[neg]] = NEGATIVE
        steps[active] += 1
        ok = ~neg
        if first_only and first_negative:
            # only roots before the earliest offender can still matter
            ok &= active < min(first_negative)
        active, n, kk, new_n, new_k = active[ok], n[ok], kk[ok], new_n[ok], new_k[ok]
        if hook is not None and active.size:
            hook(step, active, n, kk, new_n, new_k)
        parts[active], k[active] = new_n, new_k
        step += 1
    return SweepResult(roots, steps, reason, first_negative)
