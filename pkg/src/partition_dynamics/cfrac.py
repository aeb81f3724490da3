"""Finite continued fractions of rationals in (0, 1].

A rational ``x`` in (0, 1) is written ``x = 1/(a1 + 1/(a2 + ... + 1/ak))``
and stored as the digit tuple ``(a1, ..., ak)`` with ``ak > 1``.  The
value 1 has the one-digit expansion ``(1,)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

CFExpansion = tuple[int, ...]


def as_fraction(x, q: int | None = None) -> Fraction:
    """Coerce ``x`` (or the pair ``x, q``) to a Fraction in [0, 1]."""
    if q is not None:
        x = Fraction(x, q)
    elif isinstance(x, str):
        x = Fraction(x.strip())
    else:
        x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"{x} is not in [0, 1]")
    return x


def normalize_cf(digits: Sequence[int]) -> CFExpansion:
    """Validate ``digits`` and fold a trailing 1 into the previous digit."""
    digits = tuple(int(a) for a in digits)
    if not digits:
        raise ValueError("empty continued fraction")
    if any(a < 1 for a in digits):
        raise ValueError(f"continued fraction digits must be >= 1: {digits}")
    if len(digits) > 1 and digits[-1] == 1:
        digits = digits[:-2] + (digits[-2] + 1,)
    return digits


def cf_expand(x, q: int | None = None) -> CFExpansion:
    """Canonical expansion of a rational in (0, 1].

    >>> cf_expand(Fraction(8, 19))
    (2, 2, 1, 2)
    """
    x = as_fraction(x, q)
    if x == 0:
        raise ValueError("0 has no expansion in this convention")
    p, q = x.numerator, x.denominator
    digits = []
    while p:
        a, r = divmod(q, p)
        digits.append(a)
        q, p = p, r
    return normalize_cf(digits)


def cf_value(digits: Sequence[int]) -> Fraction:
    """Evaluate ``[a1, ..., ak]`` directly from the innermost digit out."""
    digits = tuple(digits)
    if not digits or any(a < 1 for a in digits):
        raise ValueError(f"invalid digits {digits}")
    value = Fraction(0)
    for a in reversed(digits):
        value = 1 / (a + value)
    return value


def convergents(digits: Sequence[int]) -> list[tuple[int, int]]:
    """Convergent pairs ``(p_j, q_j)`` for ``j = 0..k``.

    Uses ``p0 = 0, q0 = 1`` and ``p_{-1} = 1, q_{-1} = 0`` so that
    ``p1 = 1, q1 = a1``.
    """
    digits = normalize_cf(digits)
    p_prev, q_prev, p, q = 1, 0, 0, 1
    out = [(p, q)]
    for a in digits:
        p_prev, q_prev, p, q = p, q, a * p + p_prev, a * q + q_prev
        out.append((p, q))
    return out


def mirror(digits: Sequence[int]) -> Fraction:
    """Return ``q_{k-1} / q_k``, which equals ``[ak, ..., a1]``."""
    digits = normalize_cf(digits)
    conv = convergents(digits)
    result = Fraction(conv[-2][1], conv[-1][1])
    if result != cf_value(digits[::-1]):
        raise AssertionError(f"mirror identity failed for {digits}")
    return result
