"""Extended versions of other three-dimensional continued fraction maps.

Each map acts on ``(n1, n2, n3) x [k1, k2, k3]``.  For the Monkemeyer and
Cassaigne maps the multiplicities can turn negative, so their steps return
a :class:`SignedPartition` rather than a :class:`Partition`.  The step
functions here are written from the formulas; :mod:`.mapdef` holds the same
maps as matrices, and the tests compare the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .mapdef import (
    BOUNDARY,
    NEGATIVE,
    BoundaryError,
    MapDef,
    SignedPartition,
    builtin_mapdef,
    strict_roots,
    sweep,
)
from .partitions import Partition, conjugate_raw
from .triangle import triangle_mapdef, tri_apply

TWINS = {"t13_12_12": "triangle", "t132_12_e": "t12e12"}


def _three(lam: Partition | SignedPartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n, k = tuple(lam.parts), tuple(lam.mults)
    if len(n) != 3:
        raise ValueError(f"this map acts on three parts, got {lam}")
    if not n[0] > n[1] > n[2] > 0:
        raise ValueError(f"parts must be strictly decreasing and positive: {n}")
    return n, k


def monkemeyer_step(lam: Partition) -> tuple[str, SignedPartition]:
    (n1, n2, n3), (k1, k2, k3) = _three(lam)
    if n2 + n3 > n1:
        return "0", SignedPartition((n2, n1 - n3, n2 - n3), (k1 + k2 + k3, k1, -k1 - k3))
    if n2 + n3 < n1:
        return "1", SignedPartition((n1 - n3, n2, n2 - n3), (k1, k1 + k2 + k3, -k1 - k3))
    raise BoundaryError(f"{lam} is on the boundary n2 + n3 = n1")


def cassaigne_step(lam: Partition) -> tuple[str, SignedPartition]:
    (n1, n2, n3), (k1, k2, k3) = _three(lam)
    if n2 + n3 > n1:
        return "0", SignedPartition((n2, n3, n2 + n3 - n1), (k1 + k2, k1 + k3, -k1))
    if n2 + n3 < n1:
        return "1", SignedPartition((n1 - n3, n2, n2 - n3), (k1, k1 + k2 + k3, -k1 - k3))
    raise BoundaryError(f"{lam} is on the boundary n2 + n3 = n1")


def _t12e12_apply(lam: Partition, branch: str) -> Partition:
    (n1, n2, n3), (k1, k2, k3) = _three(lam)
    if branch == "0":
        return Partition((n1 + n3 - n2, n3, n2 - n3), (k1, k2 + k3, k1 + k2))
    return Partition((n1 - n3, n2 - n3, n3), (k1, k2, k1 + k2 + k3))


def t12e12_branch(lam: Partition) -> str:
    (_, n2, n3), _ = _three(lam)
    if 2 * n3 > n2:
        return "0"
    if 2 * n3 < n2:
        return "1"
    raise BoundaryError(f"{lam} is on the boundary 2*n3 = n2")


def t12e12_step(lam: Partition) -> tuple[str, Partition]:
    branch = t12e12_branch(lam)
    return branch, _t12e12_apply(lam, branch)


def twin_step(name: str, lam: Partition) -> tuple[str, Partition]:
    """Step of a twin map: the partner's step under swapped branch labels."""
    swap = {"0": "1", "1": "0"}
    if name == "t13_12_12":
        _three(lam)
        n = lam.parts
        excess = n[1] + n[2] - n[0]
        if excess == 0:
            raise BoundaryError(f"{lam} is on the boundary n2 + n3 = n1")
        partner = "0" if excess > 0 else "1"
        return swap[partner], tri_apply(lam, partner)
    if name == "t132_12_e":
        partner = t12e12_branch(lam)
        return swap[partner], _t12e12_apply(lam, partner)
    raise ValueError(f"unknown twin {name!r}; known: {', '.join(TWINS)}")


def resolve_map(name_or_def: str | MapDef, dim: int = 3) -> MapDef:
    if isinstance(name_or_def, MapDef):
        return name_or_def
    if name_or_def == "triangle":
        return triangle_mapdef(dim)
    return builtin_mapdef(name_or_def)


@dataclass(frozen=True)
class ZooRow:
    a: int
    parts: tuple[int, ...]
    mults: tuple[int, ...]
    label: str

    def to_dict(self) -> dict:
        return {"a": self.a, "branch": self.label, "parts": list(self.parts), "mults": list(self.mults)}


def map_orbit(mapdef: MapDef, parts: Sequence[int], mults: Sequence[int], max_steps: int = 10_000) -> list[ZooRow]:
    """Iterate a matrix-defined map, stopping at a boundary or at the first
    negative multiplicity (flagged ``NEGATIVE``)."""
    parts, mults = tuple(parts), tuple(mults)
    rows = []
    for a in range(max_steps):
        if any(k < 0 for k in mults):
            rows.append(ZooRow(a, parts, mults, NEGATIVE))
            return rows
        try:
            label, out = mapdef.step(parts, mults)
        except BoundaryError:
            rows.append(ZooRow(a, parts, mults, BOUNDARY))
            return rows
        rows.append(ZooRow(a, parts, mults, label))
        parts, mults = out.parts, out.mults
    raise RuntimeError(f"orbit did not stop within {max_steps} steps")


@dataclass(frozen=True)
class ClassifierVerdict:
    map: str
    dim: int
    bound: int
    partition_safe: bool
    roots: int
    counterexample: dict | None = None

    def __post_init__(self):
        if not self.partition_safe and self.counterexample is None:
            raise ValueError("an unsafe verdict needs a counterexample")

    def to_dict(self) -> dict:
        return {
            "map": self.map,
            "dim": self.dim,
            "bound": self.bound,
            "partition_safe": self.partition_safe,
            "roots": self.roots,
            "counterexample": self.counterexample,
        }


def classify(map_: str | MapDef, bound: int, dim: int = 3) -> ClassifierVerdict:
    """Sweep every root ``(n1 > ... > nm) x [1, 0, ..., 0]`` with ``n1 <= bound``.

    A map is partition-safe when no orbit ever produces a negative
    multiplicity.  The counterexample reported is the one from the
    lexicographically smallest root.
    """
    mapdef = resolve_map(map_, dim)
    roots = strict_roots(mapdef.dim, bound)
    result = sweep(mapdef, roots, first_only=True)
    if not result.first_negative:
        return ClassifierVerdict(mapdef.name, mapdef.dim, bound, True, len(roots))
    first = min(result.first_negative)
    step, label, n, k, out_n, out_k = result.first_negative[first]
    counterexample = {
        "root": {"parts": [int(v) for v in roots[first]], "mults": [1] + [0] * (mapdef.dim - 1)},
        "step": step,
        "branch": label,
        "input": {"parts": list(n), "mults": list(k)},
        "output": {"parts": list(out_n), "mults": list(out_k)},
    }
    return ClassifierVerdict(mapdef.name, mapdef.dim, bound, False, len(roots), counterexample)


def conjugation_diagram_holds(mapdef: MapDef, lam: Partition, label: str) -> bool:
    """``conj(lam) == T_label(conj(T_label(lam)))`` with raw conjugates and the
    outer step applied by formula."""
    image = mapdef.apply_branch(label, lam.parts, lam.mults)
    if not image.nonnegative:
        return False
    conj_image = conjugate_raw(Partition(image.parts, image.mults))
    back = mapdef.apply_branch(label, conj_image.parts, conj_image.mults)
    target = conjugate_raw(lam)
    return back.parts == target.parts and back.mults == target.mults


def find_conjugation_failure(map_: str | MapDef, max_weight: int = 30, dim: int = 3):
    """First ``(lam, branch)`` (by weight, then parts, then mults) where the
    conjugation diagram fails, or ``None``.  Only positive multiplicities
    are tried."""
    mapdef = resolve_map(map_, dim)
    m = mapdef.dim
    for w in range(1, max_weight + 1):
        for parts in map(tuple, strict_roots(m, w)):
            for mults in _positive_mults(parts, w):
                lam = Partition(parts, mults)
                try:
                    label = mapdef.select(parts).label
                except BoundaryError:
                    continue
                if not conjugation_diagram_holds(mapdef, lam, label):
                    return lam, label
    return None


def _positive_mults(parts: tuple[int, ...], weight: int):
    """Positive multiplicity vectors ``k`` with ``k . parts == weight``."""
    if len(parts) == 1:
        if weight % parts[0] == 0 and weight // parts[0] >= 1:
            yield (weight // parts[0],)
        return
    rest = sum(parts[1:])
    for k in range(1, (weight - rest) // parts[0] + 1):
        for tail in _positive_mults(parts[1:], weight - k * parts[0]):
            yield (k,) + tail
