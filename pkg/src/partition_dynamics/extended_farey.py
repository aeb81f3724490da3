"""The extended Farey map on two-part partitions.

``(n1, n2) x [k1, k2]`` goes to ``(n2, n1-n2) x [k1+k2, k1]`` on branch 0
(when ``n2 >= n1-n2``) and to ``(n1-n2, n2) x [k1, k1+k2]`` on branch 1
(when ``n1-n2 >= n2``).  Iterating from a root ``(n, r) x [e, 0]`` runs the
Farey map on ``r/n`` while carrying multiplicities along, and ends when
the two parts become equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cfrac import cf_expand
from .farey import TERMINAL, depth, extended_binary_sequence, word_to_fraction
from .numerics import ext_gcd
from .partitions import Partition, conjugate, conjugate_raw


class BranchError(ValueError):
    """A branch was requested whose domain condition does not hold."""


@dataclass(frozen=True)
class OrbitStep:
    """Generation ``m`` of an orbit.

    ``branch`` is the branch applied to this state to reach the next one;
    the last step carries ``"terminal"``.
    """

    m: int
    state: Partition
    branch: str

    def to_dict(self) -> dict:
        return {"m": self.m, "branch": self.branch, **self.state.to_dict()}


@dataclass(frozen=True)
class Orbit:
    root: Partition
    steps: tuple[OrbitStep, ...]

    @property
    def states(self) -> list[Partition]:
        return [s.state for s in self.steps]

    @property
    def word(self) -> str:
        """Branches actually applied, in order."""
        return "".join(s.branch for s in self.steps if s.branch != TERMINAL)

    @property
    def final(self) -> Partition:
        return self.steps[-1].state

    def __len__(self) -> int:
        # number of map applications
        return len(self.steps) - 1

    def to_dict(self) -> dict:
        return {"root": self.root.to_dict(), "steps": [s.to_dict() for s in self.steps]}


def _two_parts(lam: Partition) -> tuple[int, int, int, int]:
    if lam.m != 2:
        raise ValueError(f"the extended Farey map acts on two-part states, got {lam}")
    (n1, n2), (k1, k2) = lam.parts, lam.mults
    if n1 == n2:
        raise ValueError(f"{lam} has equal parts: it is a terminal state")
    return n1, n2, k1, k2


def is_terminal(lam: Partition) -> bool:
    return lam.m == 1 or (lam.m == 2 and lam.parts[0] == lam.parts[1])


def branch_options(lam: Partition) -> tuple[str, ...]:
    """Branches whose (non-strict) domain condition holds for ``lam``."""
    n1, n2, _, _ = _two_parts(lam)
    out = []
    if n2 >= n1 - n2:
        out.append("0")
    if n1 - n2 >= n2:
        out.append("1")
    return tuple(out)


def ef_apply(lam: Partition, branch: str) -> Partition:
    """Apply branch ``branch`` of the extended Farey map, checking its domain."""
    n1, n2, k1, k2 = _two_parts(lam)
    if branch == "0":
        if n2 < n1 - n2:
            raise BranchError(f"branch 0 needs n2 >= n1 - n2, got {lam}")
        return Partition((n2, n1 - n2), (k1 + k2, k1))
    if branch == "1":
        if n1 - n2 < n2:
            raise BranchError(f"branch 1 needs n1 - n2 >= n2, got {lam}")
        return Partition((n1 - n2, n2), (k1, k1 + k2))
    raise ValueError(f"unknown branch {branch!r}")


def ef_step(lam: Partition, tie_branch: str = "0") -> tuple[str, Partition]:
    """One step of the extended Farey map.

    On the tie ``n1 == 2*n2`` both branches apply; ``tie_branch`` picks one.
    The image may be a terminal state with equal parts, see :func:`is_terminal`.
    """
    options = branch_options(lam)
    branch = tie_branch if len(options) == 2 else options[0]
    return branch, ef_apply(lam, branch)


def ef_orbit(root: Partition, tie_branch: str = "0") -> Orbit:
    """Iterate from ``root`` until the two parts coincide.

    For a root ``(n, r) x [e, 0]`` the number of steps is ``depth(r/n)``
    and the final state is ``(d, d) x [..]`` with ``d = gcd(n, r)``.
    """
    n1, n2, _, _ = _two_parts(root)
    steps = []
    state, m = root, 0
    while not is_terminal(state):
        branch, nxt = ef_step(state, tie_branch)
        steps.append(OrbitStep(m, state, branch))
        state, m = nxt, m + 1
    steps.append(OrbitStep(m, state, TERMINAL))
    orbit = Orbit(root, tuple(steps))
    if root.mults[1] == 0:
        d = gcd(n1, n2)
        if len(orbit) != depth(n2, n1) or orbit.final.parts != (d, d):
            raise AssertionError(f"orbit of {root} has inconsistent length")  # pragma: no cover
    return orbit


def root_of(n: int, r: int, e: int = 1) -> Partition:
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    if e < 1:
        raise ValueError("e must be >= 1")
    return Partition((n, r), (e, 0))


def orbit_generations(n: int, r: int, e: int = 1) -> list[Partition]:
    """Generations ``1 .. depth(r/n) - 1`` of the orbit of ``(n, r) x [e, 0]``.

    These are the genuine two-part partitions of ``e*n`` in the orbit; the
    root and the equal-parts endpoint are left out.
    """
    states = ef_orbit(root_of(n, r, e)).states
    return [s.canonical() for s in states[1:-1]]


def orbit_of_fraction(r: int, n: int) -> list[Partition]:
    """Partitions of ``n`` generated by the reduced fraction ``r/n``."""
    if gcd(r, n) != 1:
        raise ValueError(f"{r}/{n} is not reduced")
    return orbit_generations(n, r)


def paired_fraction_check(r: int, n: int) -> bool:
    """``r/n`` and ``(n-r)/n`` generate the same partitions."""
    return orbit_of_fraction(r, n) == orbit_of_fraction(n - r, n)


def _check_farey_reachable(lam: Partition) -> tuple[int, int, int, int]:
    n1, n2, k1, k2 = _two_parts(lam)
    if k1 < 1:
        raise ValueError(f"{lam} needs k1 >= 1")
    if gcd(n1, n2) != 1 or gcd(k1, k2) != 1:
        raise ValueError(f"{lam} is not Farey-reachable: parts and multiplicities must be coprime")
    return n1, n2, k1, k2


def find_root(lam: Partition) -> Fraction:
    """A fraction ``r/n`` whose orbit contains ``lam``, via a Bezout solution.

    Picks ``h1, h2`` with ``h2*k1 - h1*k2 = 1``, ``0 <= h1 < k1`` and
    ``1 <= h2 <= k2``; then ``(r, n) = (h2*n2 + h1*n1, k2*n2 + k1*n1)``.
    Returns the smaller member of the pair ``{r/n, (n-r)/n}``.
    """
    n1, n2, k1, k2 = _check_farey_reachable(lam)
    _, x, y = ext_gcd(k1, k2)
    h2_, h1_ = x, -y
    t = h1_ // k1
    h1, h2 = h1_ - t * k1, h2_ - t * k2
    r, n = h2 * n2 + h1 * n1, k2 * n2 + k1 * n1
    return Fraction(min(r, n - r), n)


def ef_inverse(lam: Partition, branch: str) -> Partition:
    """Preimage of ``lam`` under branch ``branch``."""
    (n1, n2), (k1, k2) = lam.parts, lam.mults
    if branch == "0":
        if k1 < k2:
            raise BranchError(f"no branch-0 preimage of {lam}")
        return Partition((n1 + n2, n1), (k2, k1 - k2))
    if branch == "1":
        if k2 < k1:
            raise BranchError(f"no branch-1 preimage of {lam}")
        return Partition((n1 + n2, n2), (k1, k2 - k1))
    raise ValueError(f"unknown branch {branch!r}")


def find_root_backward(lam: Partition) -> Fraction:
    """Independent route to :func:`find_root`: walk preimages up to ``[1, 0]``."""
    _check_farey_reachable(lam)
    state = lam
    while state.mults != (1, 0):
        k1, k2 = state.mults
        state = ef_inverse(state, "0" if k1 > k2 else "1")
    n, r = state.parts
    return Fraction(min(r, n - r), n)


def reversed_partner(r: int, n: int) -> Fraction:
    """The fraction whose extended binary sequence is that of ``r/n`` reversed."""
    ext = extended_binary_sequence(Fraction(r, n))
    return word_to_fraction(ext[::-1][:-1])


def palindrome_v1_check(r: int, n: int, m: int | None = None) -> bool:
    """Conjugation swaps generation ``m`` of ``r/n`` with generation
    ``l+1-m`` of the reversed-sequence partner.

    With ``m=None`` every generation is checked.  Also checks that the
    partner's continued fraction digits are those of ``r/n`` reversed.
    """
    if gcd(r, n) != 1:
        raise ValueError(f"{r}/{n} is not reduced")
    if not 1 <= r or not 2 * r < n:
        raise ValueError(f"need 1 <= r < n/2, got r={r}, n={n}")
    partner = reversed_partner(r, n)
    if partner.denominator != n:
        return False
    if cf_expand(partner) != cf_expand(r, n)[::-1]:
        return False
    gens = orbit_of_fraction(r, n)
    partner_gens = orbit_of_fraction(partner.numerator, n)
    ell = len(gens)
    if len(partner_gens) != ell:
        return False
    ms = range(1, ell + 1) if m is None else [m]
    for j in ms:
        if not 1 <= j <= ell:
            raise ValueError(f"generation {j} outside 1..{ell}")
        if conjugate(gens[j - 1]) != partner_gens[ell - j]:
            return False
    return True


def palindrome_v2_apply(final: Partition, word: str) -> Partition:
    """Run ``word`` backwards on the conjugate of ``final``.

    If ``word`` carries ``lam`` to ``final``, the result is the conjugate of
    ``lam`` in raw (unmerged) form.
    """
    state = conjugate_raw(final)
    for branch in reversed(word):
        state = ef_apply(state, branch)
    return state


def palindrome_v2_check(lam: Partition, word: str) -> bool:
    state = lam
    for branch in word:
        state = ef_apply(state, branch)
    return palindrome_v2_apply(state, word) == conjugate_raw(lam)


def scale_orbit_check(n: int, r: int, d: int, e: int) -> bool:
    """The orbit of ``(dn, dr) x [e, 0]`` is that of ``(n, r) x [1, 0]`` scaled."""
    base = ef_orbit(root_of(n, r)).states
    scaled = ef_orbit(root_of(d * n, d * r, e)).states
    return len(base) == len(scaled) and all(
        s == b.scaled(d, e) for s, b in zip(scaled, base)
    )


def conjugation_commutes(lam: Partition, branch: str) -> bool:
    """``conj(lam) == F_branch(conj(F_branch(lam)))`` in raw form."""
    image = ef_apply(lam, branch)
    return ef_apply(conjugate_raw(image), branch) == conjugate_raw(lam)
