"""The slow Farey map, the Farey tree and the matrix coding of rationals.

Branch 0 is ``x -> (1-x)/x`` on (1/2, 1) and branch 1 is ``x -> x/(1-x)``
on (0, 1/2).  Iteration stops at 1/2, the root of the tree.  Binary words
are plain strings over ``"01"``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cfrac import as_fraction, cf_expand, normalize_cf
from .numerics import IntMat, mat_mul, mat_product, mat_vec

TERMINAL = "terminal"
HALF = Fraction(1, 2)

# Inverse branches acting on column vectors (p, q).
PHI0 = IntMat([[0, 1], [1, 1]])
PHI1 = IntMat([[1, 0], [1, 1]])
# Forward branches.
F0 = IntMat([[-1, 1], [1, 0]])
F1 = IntMat([[1, 0], [-1, 1]])

PHI = {"0": PHI0, "1": PHI1}


def _open_unit(x) -> Fraction:
    x = as_fraction(x)
    if not 0 < x < 1:
        raise ValueError(f"{x} is not in (0, 1)")
    return x


def phi(branch: str, x) -> Fraction:
    """Apply the inverse branch ``Phi_branch``: 1/(1+x) or x/(1+x)."""
    x = Fraction(x)
    if branch == "0":
        return 1 / (1 + x)
    if branch == "1":
        return x / (1 + x)
    raise ValueError(f"unknown branch {branch!r}")


def farey_step(x) -> tuple[str, Fraction]:
    """One step of the Farey map.

    Returns ``(branch, image)``.  At the root 1/2 both branches give 1/1,
    so the step is reported as ``TERMINAL``.
    """
    x = _open_unit(x)
    if x == HALF:
        return TERMINAL, Fraction(1)
    if x > HALF:
        return "0", (1 - x) / x
    return "1", x / (1 - x)


def binary_sequence(x) -> str:
    x = _open_unit(x)
    word = []
    while x != HALF:
        branch, x = farey_step(x)
        word.append(branch)
    return "".join(word)


def extended_binary_sequence(x) -> str:
    """Binary sequence with the final letter fixed to 1."""
    return binary_sequence(x) + "1"


def binary_sequence_from_cf(digits: Sequence[int]) -> str:
    """``1^(a1-1) 0 1^(a2-1) 0 ... 1^(ak-2)``, read off the digits."""
    digits = normalize_cf(digits)
    if digits == (1,):
        raise ValueError("1/1 sits above the tree and has no binary sequence")
    head = "".join("1" * (a - 1) + "0" for a in digits[:-1])
    return head + "1" * (digits[-1] - 2)


def depth(p, q: int | None = None) -> int:
    """Level of ``p/q`` in the Farey tree, counted by iterating the map.

    The fraction need not be reduced.  ``depth(1, 1) == 0``.
    """
    if q is not None and p == 0:
        raise ValueError("depth of 0 is undefined")
    x = as_fraction(p, q)
    if x == 0:
        raise ValueError("depth of 0 is undefined")
    if x == 1:
        return 0
    return len(binary_sequence(x)) + 1


def depth_from_cf(digits: Sequence[int]) -> int:
    return sum(normalize_cf(digits)) - 1


def fast_depth(p: int, q: int) -> int:
    """Depth through the digit sum; cheap even for large denominators."""
    return depth_from_cf(cf_expand(p, q))


def farey_tree(levels: int, sort: bool = False) -> list[list[Fraction]]:
    """Levels 1..``levels`` of the tree rooted at 1/2.

    Children of ``x`` are listed as ``Phi1(x)`` then ``Phi0(x)``.  With
    ``sort=True`` each level is returned in ascending order instead.
    """
    if levels < 1:
        raise ValueError("levels must be >= 1")
    tree = [[HALF]]
    for _ in range(levels - 1):
        tree.append([phi(b, x) for x in tree[-1] for b in "10"])
    if sort:
        tree = [sorted(level) for level in tree]
    return tree


def word_matrix(word: str) -> IntMat:
    return mat_product((PHI[c] for c in word), 2)


def word_to_fraction(word: str) -> Fraction:
    """Inverse of :func:`binary_sequence`: apply the word's Phi's to (1, 2)."""
    p, q = mat_vec(word_matrix(word), (1, 2))
    return Fraction(p, q)


def matrix_of(x) -> IntMat:
    """The determinant +1 matrix among ``M(sigma) Phi0`` and ``M(sigma) Phi1``.

    Its columns are Farey neighbours whose mediant is ``x``.
    """
    x = _open_unit(x)
    base = word_matrix(binary_sequence(x))
    for last in (PHI0, PHI1):
        m = mat_mul(base, last)
        if m.det() == 1:
            return m
    raise AssertionError("no determinant +1 matrix found")  # pragma: no cover


def is_rational_matrix(m: IntMat) -> bool:
    """Membership test for the set of matrices of rationals in (0, 1)."""
    (p1, p2), (q1, q2) = m.rows
    return 1 <= p1 <= q1 and 0 <= p2 < q2 and p1 * q2 - p2 * q1 == 1
