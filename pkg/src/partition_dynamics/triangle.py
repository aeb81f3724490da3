"""The slow-Triangle map in dimension m and its extension to partitions.

On parts ``(n1, ..., nm)`` branch 0 applies when ``n2 + nm > n1`` and
branch 1 when ``n2 + nm < n1``.  On the boundary ``n1 == n2 + nm`` the
partition map uses branch D, which merges terms and drops one dimension.
Two-part states are handed to the extended Farey map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .extended_farey import ef_step, is_terminal
from .farey import TERMINAL
from .mapdef import BOUNDARY, Branch, BoundaryError, MapDef, strict_roots, sweep
from .numerics import IntMat, mat_vec
from .partitions import Partition, conjugate_raw

D = "D"


def triangle_matrices(m: int) -> dict[str, tuple[tuple[int, ...], IntMat, IntMat]]:
    """``{branch: (when, parts matrix, mults matrix)}`` for dimension ``m``."""
    if m < 2:
        raise ValueError("the Triangle map needs m >= 2")

    def e(i):
        return [int(j == i) for j in range(m)]

    def plus(a, b, s=1):
        return [x + s * y for x, y in zip(a, b)]

    p0 = [e(i + 1) for i in range(m - 1)] + [plus(e(0), e(1), -1)]
    k0 = [plus(e(0), e(1))] + [e(i + 1) for i in range(1, m - 1)] + [e(0)]
    if m == 2:
        k0 = [plus(e(0), e(1)), e(0)]
    p1 = [plus(e(0), e(m - 1), -1)] + [e(i) for i in range(1, m)]
    k1 = [e(i) for i in range(m - 1)] + [plus(e(m - 1), e(0))]
    when0 = tuple(plus(plus(e(1), e(m - 1)), e(0), -1))
    when1 = tuple(-c for c in when0)
    return {"0": (when0, IntMat(p0), IntMat(k0)), "1": (when1, IntMat(p1), IntMat(k1))}


def triangle_mapdef(m: int) -> MapDef:
    mats = triangle_matrices(m)
    return MapDef("triangle", m, tuple(Branch(b, *mats[b]) for b in ("0", "1")))


def _check_strict(parts: Sequence[int]) -> None:
    if any(a <= b for a, b in zip(parts, parts[1:])) or parts[-1] < 1:
        raise ValueError(f"parts must be strictly decreasing and positive: {tuple(parts)}")


def tri_point_step(x: Sequence[int]) -> tuple[str, tuple[int, ...]]:
    """One step of the Triangle map on an integer cone point ``x0 > ... > xn > 0``."""
    x = tuple(int(v) for v in x)
    if len(x) < 2:
        raise ValueError("need at least two coordinates")
    _check_strict(x)
    excess = x[1] + x[-1] - x[0]
    if excess == 0:
        raise BoundaryError(f"{x} is on the boundary x1 + xn = x0")
    branch = "0" if excess > 0 else "1"
    return branch, mat_vec(triangle_matrices(len(x))[branch][1], x)


def tri_apply(lam: Partition, branch: str, check: bool = True) -> Partition:
    """Apply branch ``0``, ``1`` or ``D`` by formula.

    With ``check=False`` the branch predicate is not tested, which is what
    the conjugation diagrams need.
    """
    n, k = lam.parts, lam.mults
    m = len(n)
    if m < 2:
        raise ValueError("need at least two parts")
    excess = n[1] + n[-1] - n[0]
    if branch == "0":
        if check and not excess > 0:
            raise BoundaryError(f"branch 0 needs n2 + nm > n1, got {lam}")
        if m == 2:
            return Partition((n[1], n[0] - n[1]), (k[0] + k[1], k[0]))
        return Partition(n[1:] + (n[0] - n[1],), (k[0] + k[1],) + k[2:] + (k[0],))
    if branch == "1":
        if check and not excess < 0:
            raise BoundaryError(f"branch 1 needs n2 + nm < n1, got {lam}")
        return Partition((n[0] - n[-1],) + n[1:], k[:-1] + (k[0] + k[-1],))
    if branch == D:
        if m < 3:
            raise ValueError("branch D needs at least three parts")
        if check and excess != 0:
            raise ValueError(f"branch D needs n1 == n2 + nm, got {lam}")
        return Partition(n[1:], (k[0] + k[1],) + k[2:-1] + (k[0] + k[-1],))
    raise ValueError(f"unknown branch {branch!r}")


def tri_step(lam: Partition) -> tuple[str, Partition]:
    """One step of the extended map, including the boundary branch D."""
    _check_strict(lam.parts)
    if lam.m == 2:
        return ef_step(lam)
    excess = lam.parts[1] + lam.parts[-1] - lam.parts[0]
    branch = "0" if excess > 0 else "1" if excess < 0 else D
    out = tri_apply(lam, branch)
    if not out.strict:
        out = out.canonical()
    return branch, out


@dataclass(frozen=True)
class TriOrbitStep:
    """Row ``a`` of an orbit table; ``branch`` is the branch applied next."""

    a: int
    state: Partition
    branch: str
    point: tuple[tuple[int, int], ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "branch": self.branch,
            **self.state.to_dict(),
            "point": [f"{p}/{q}" for p, q in self.point],
        }


def cone_point(lam: Partition) -> tuple[tuple[int, int], ...]:
    """``(n2/n1, ..., nm/n1)`` kept unreduced, as ``(numerator, denominator)``."""
    n = lam.parts
    return tuple((v, n[0]) for v in n[1:])


def tri_orbit(root: Partition, through_root: bool = False) -> list[TriOrbitStep]:
    """Orbit table of ``root``.

    A root with three or more parts is iterated, through D steps, until a
    two-part state is reached.  With ``through_root=True`` the Farey part of
    the orbit is followed as well, down to a single part.  A two-part root
    always runs to its equal-parts endpoint, which is then merged.
    """
    _check_strict(root.parts)
    rows = []
    state, a = root, 0
    farey_phase = root.m == 2
    while True:
        if state.m == 2 and not farey_phase:
            if not through_root:
                break
            farey_phase = True
        if state.m == 1 or is_terminal(state):
            state = state.canonical()
            break
        branch, nxt = tri_step(state)
        rows.append(TriOrbitStep(a, state, branch, cone_point(state)))
        state, a = nxt, a + 1
    rows.append(TriOrbitStep(a, state, TERMINAL, cone_point(state)))
    return rows


def tri_inv_0(lam: Partition, strict: bool = False) -> Partition:
    """Preimage under branch 0: ``(n1+nm, n1, ..., n(m-1)) x [km, k1-km, k2, ..., k(m-1)]``.

    Needs ``k1 >= km`` (``k1 > km`` with ``strict=True``).
    """
    _check_strict(lam.parts)
    n, k = lam.parts, lam.mults
    if k[0] < k[-1] or (strict and k[0] == k[-1]):
        raise ValueError(f"no branch-0 preimage of {lam}: need k1 {'>' if strict else '>='} km")
    return Partition((n[0] + n[-1],) + n[:-1], (k[-1], k[0] - k[-1]) + k[1:-1])


def tri_inv_1(lam: Partition, strict: bool = False) -> Partition:
    """Preimage under branch 1: ``(n1+nm, n2, ..., nm) x [k1, ..., k(m-1), km-k1]``.

    Needs ``km >= k1`` (``km > k1`` with ``strict=True``).
    """
    _check_strict(lam.parts)
    n, k = lam.parts, lam.mults
    if k[-1] < k[0] or (strict and k[0] == k[-1]):
        raise ValueError(f"no branch-1 preimage of {lam}: need km {'>' if strict else '>='} k1")
    return Partition((n[0] + n[-1],) + n[1:], k[:-1] + (k[-1] - k[0],))


def tri_inv_D_range(lam: Partition, strict: bool = True) -> range:
    """Admissible ``k`` for :func:`tri_inv_D`.

    ``1 .. min(k1, kp) - 1`` keeps every multiplicity positive; with
    ``strict=False`` the endpoint ``min(k1, kp)`` (one zero entry) is allowed.
    """
    k = lam.mults
    top = min(k[0], k[-1]) - (1 if strict else 0)
    return range(1, max(top, 0) + 1)


def tri_inv_D(lam: Partition, k: int, strict: bool = True) -> Partition:
    """One of the preimages under branch D, one dimension up.

    ``(n1, ..., np) x [k1, ..., kp]`` comes from
    ``(n1+np, n1, ..., np) x [k, k1-k, k2, ..., k(p-1), kp-k]``.
    """
    _check_strict(lam.parts)
    if lam.m < 2:
        raise ValueError("branch D preimages need at least two parts")
    if k not in tri_inv_D_range(lam, strict):
        raise ValueError(f"k={k} outside the admissible range for {lam}")
    n, ks = lam.parts, lam.mults
    return Partition((n[0] + n[-1],) + n, (k, ks[0] - k) + ks[1:-1] + (ks[-1] - k,))


def tri_conjugation_commutes(lam: Partition, branch: str) -> bool:
    """``conj(lam) == T_branch(conj(T_branch(lam)))`` using raw conjugates.

    The outer application is by formula: for three or more parts the
    conjugated state lies on the boundary hyperplane.
    """
    image = tri_apply(lam, branch)
    return tri_apply(conjugate_raw(image), branch, check=False) == conjugate_raw(lam)


def tri_palindrome_check(lam: Partition, word: str) -> bool:
    """Apply ``word`` to ``lam``, then the reversed word to the conjugate of the result."""
    state = lam
    for b in word:
        state = tri_apply(state, b)
    back = conjugate_raw(state)
    for b in reversed(word):
        back = tri_apply(back, b, check=False)
    return back == conjugate_raw(lam)


# ---------------------------------------------------------------------------
# Allowable multiplicity vectors.


@dataclass
class LemmaReport:
    m: int
    bound: int
    roots: int
    states: int
    allowable: set[tuple[int, ...]]
    violations: dict[str, int]
    examples: dict[str, tuple]

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())


LEMMAS = ("a", "b", "c", "d", "e", "e_k_gt_1")


def _lemma_masks(step: int, k: np.ndarray, new_k: np.ndarray) -> dict[str, np.ndarray]:
    m = k.shape[1]
    masks = {}
    # (a) the first multiplicity stays positive
    masks["a"] = new_k[:, 0] <= 0
    # (b) a positive suffix k_i..k_m (i > 1) stays positive
    bad = np.zeros(len(k), dtype=bool)
    for i in range(1, m):
        bad |= (k[:, i:] > 0).all(axis=1) & ~(new_k[:, i:] > 0).all(axis=1)
    masks["b"] = bad
    # (c) [k, 0, ...] with k > 1
    masks["c"] = (new_k[:, 0] > 1) & (new_k[:, 1] == 0)
    # (d) [..., 0] with k2 > 0, after the first step
    masks["d"] = (new_k[:, -1] == 0) & (new_k[:, 1] > 0)
    # (e) first and last multiplicities equal and positive
    masks["e"] = (new_k[:, 0] == new_k[:, -1]) & (new_k[:, 0] > 0)
    masks["e_k_gt_1"] = masks["e"] & (new_k[:, 0] > 1)
    return masks


def multiplicity_lemmas(m: int, bound: int) -> LemmaReport:
    """Run every root ``(n1, ..., nm) x [1, 0, ..., 0]`` with ``n1 <= bound``
    and ``n1 != n2 + nm`` under branches 0 and 1 until a boundary, collecting
    multiplicity vectors and counting violations of the lemma statements."""
    if m < 2:
        raise ValueError("m must be >= 2")
    roots = strict_roots(m, bound)
    if len(roots):
        roots = roots[roots[:, 1] + roots[:, -1] != roots[:, 0]]
    allowable: set[tuple[int, ...]] = set()
    if len(roots):
        allowable.add((1,) + (0,) * (m - 1))
    violations = {name: 0 for name in LEMMAS}
    examples: dict[str, tuple] = {}
    seen = [0]

    def hook(step, idx, n, k, new_n, new_k):
        seen[0] += len(new_k)
        for row in np.unique(new_k, axis=0):
            allowable.add(tuple(int(v) for v in row))
        for name, mask in _lemma_masks(step, k, new_k).items():
            hits = np.nonzero(mask)[0]
            if hits.size:
                violations[name] += int(hits.size)
                if name not in examples:
                    i = hits[0]
                    examples[name] = (
                        tuple(int(v) for v in roots[idx[i]]),
                        step + 1,
                        tuple(int(v) for v in new_n[i]),
                        tuple(int(v) for v in new_k[i]),
                    )

    if len(roots):
        result = sweep(triangle_mapdef(m), roots, hook=hook)
        assert set(result.reason) <= {BOUNDARY}
    return LemmaReport(m, bound, len(roots), seen[0] + len(roots), allowable, violations, examples)


def allowable_search(m: int, bound: int) -> set[tuple[int, ...]]:
    """Multiplicity vectors reached from roots ``[1, 0, ..., 0]`` with weight
    at most ``bound`` using branches 0 and 1 only."""
    return multiplicity_lemmas(m, bound).allowable


def point_of(lam: Partition) -> tuple[Fraction, ...]:
    """Reduced coordinates ``(n2/n1, ..., nm/n1)``."""
    return tuple(Fraction(p, q) for p, q in cone_point(lam))
