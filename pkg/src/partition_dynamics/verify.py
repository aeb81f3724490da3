"""Invariant suites behind ``partdyn verify``.

Each suite returns a JSON-ready report whose ``passed`` field decides the
exit status of the command.
"""

from __future__ import annotations

import random
from math import gcd

from .counting import p2_brute, p2_formula, p2_kim, pF2
from .extended_farey import (
    conjugation_commutes,
    branch_options,
    ef_orbit,
    palindrome_v1_check,
    palindrome_v2_check,
    root_of,
)
from .mcf_zoo import (
    cassaigne_step,
    classify,
    find_conjugation_failure,
    monkemeyer_step,
    resolve_map,
    t12e12_step,
    twin_step,
)
from .mapdef import BoundaryError, strict_roots
from .parallel import ordered_map
from .partitions import Partition
from .triangle import multiplicity_lemmas, tri_conjugation_commutes

SUITES = ("palindrome", "conjugation", "counting", "allowable", "zoo")
DEFAULT_BOUNDS = {"palindrome": 60, "conjugation": 60, "counting": 300, "allowable": 60, "zoo": 100}


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def _palindrome_for_n(n: int) -> tuple[int, list]:
    checks, failures = 0, []
    for r in range(1, (n + 1) // 2):
        if gcd(r, n) != 1:
            continue
        checks += 1
        if not palindrome_v1_check(r, n):
            failures.append({"kind": "v1", "r": r, "n": n})
        orbit = ef_orbit(root_of(n, r))
        if not palindrome_v2_check(orbit.root, orbit.word):
            failures.append({"kind": "v2", "r": r, "n": n})
    return checks, failures


def suite_palindrome(bound: int) -> dict:
    results = ordered_map(_palindrome_for_n, range(3, bound + 1))
    failures = [f for _, fs in results for f in fs]
    return {"checks": sum(c for c, _ in results), "failures": failures, "passed": not failures}


def suite_conjugation(bound: int, seed: int = 0) -> dict:
    failures, checks = [], 0
    # every two-part partition up to the bound, on each applicable branch
    for w in range(3, bound + 1):
        for n1 in range(2, w + 1):
            for n2 in range(1, n1):
                for k1 in range(1, w // n1 + 1):
                    rest = w - k1 * n1
                    if rest % n2:
                        continue
                    lam = Partition((n1, n2), (k1, rest // n2))
                    for b in branch_options(lam):
                        checks += 1
                        if not conjugation_commutes(lam, b):
                            failures.append({"map": "farey", "partition": lam.to_dict(), "branch": b})
    rng = random.Random(seed)
    for _ in range(2000):
        m = rng.randint(3, 6)
        parts = sorted(rng.sample(range(1, 60), m), reverse=True)
        mults = [rng.randint(1, 6) for _ in range(m)]
        excess = parts[1] + parts[-1] - parts[0]
        if excess == 0:
            continue
        lam = Partition(parts, mults)
        checks += 1
        if not tri_conjugation_commutes(lam, "0" if excess > 0 else "1"):
            failures.append({"map": "triangle", "partition": lam.to_dict()})
    witness = find_conjugation_failure("t12e12", 20)
    report = {"checks": checks, "failures": failures, "passed": not failures and witness is not None}
    if witness is not None:
        report["t12e12_counterexample"] = {"partition": witness[0].to_dict(), "branch": witness[1]}
    return report


def _count_row(n: int) -> dict:
    return {"n": n, "formula": p2_formula(n), "kim": p2_kim(n), "brute": p2_brute(n), "farey": pF2(n)}


def suite_counting(bound: int) -> dict:
    rows = ordered_map(_count_row, range(2, bound + 1))
    failures = []
    for row in rows:
        n = row["n"]
        if not row["formula"] == row["kim"] == row["brute"]:
            failures.append({"kind": "disagree", **row})
        complete = row["farey"] == row["brute"]
        if complete != (_is_prime(n) or n == 4):
            failures.append({"kind": "farey_characterisation", **row})
    return {"checks": len(rows), "failures": failures, "passed": not failures}


def suite_allowable(bound: int) -> dict:
    out = {"lemmas": {}, "passed": True}
    for m in (3, 4):
        rep = multiplicity_lemmas(m, bound)
        out["lemmas"][str(m)] = {
            "roots": rep.roots,
            "states": rep.states,
            "distinct_vectors": len(rep.allowable),
            "violations": rep.violations,
            "examples": {
                name: {"root": list(root), "step": step, "parts": list(n), "mults": list(k)}
                for name, (root, step, n, k) in rep.examples.items()
            },
        }
        must_hold = ("a", "b", "c", "d", "e_k_gt_1")
        if any(rep.violations[name] for name in must_hold):
            out["passed"] = False
        if m == 3:
            out["212_unreachable"] = (2, 1, 2) not in rep.allowable
            out["passed"] &= out["212_unreachable"]
    out["note"] = (
        "lemma e as stated ([k, ..., k] with k > 0) is violated at k = 1 after the first step; "
        "the suite requires the k > 1 form"
    )
    return out


def suite_zoo(bound: int) -> dict:
    expected = {
        "monkemeyer": False,
        "cassaigne": False,
        "triangle": True,
        "t12e12": True,
        "t13_12_12": True,
        "t132_12_e": True,
    }
    verdicts = {name: classify(name, bound).to_dict() for name in expected}
    mismatched = [n for n, safe in expected.items() if verdicts[n]["partition_safe"] != safe]
    formula_failures = _formula_agreement(min(bound, 30))
    return {
        "verdicts": verdicts,
        "mismatched": mismatched,
        "formula_failures": formula_failures,
        "passed": not mismatched and not formula_failures,
    }


def _formula_agreement(bound: int) -> list:
    """The hand-written steps agree with the matrix definitions."""
    steps = {
        "monkemeyer": monkemeyer_step,
        "cassaigne": cassaigne_step,
        "t12e12": t12e12_step,
        "t13_12_12": lambda lam: twin_step("t13_12_12", lam),
        "t132_12_e": lambda lam: twin_step("t132_12_e", lam),
    }
    failures = []
    rng = random.Random(1)
    for name, fn in steps.items():
        mapdef = resolve_map(name)
        for parts in map(tuple, strict_roots(3, bound)):
            mults = tuple(rng.randint(0, 4) for _ in range(3))
            if not any(mults):
                continue
            lam = Partition(parts, mults)
            try:
                label, out = fn(lam)
            except BoundaryError:
                continue
            ref_label, ref = mapdef.step(parts, mults)
            if (label, tuple(out.parts), tuple(out.mults)) != (ref_label, ref.parts, ref.mults):
                failures.append({"map": name, "partition": lam.to_dict()})
    return failures


def run_suite(name: str, bound: int | None = None) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    bound = DEFAULT_BOUNDS[name] if bound is None else bound
    func = globals()[f"suite_{name}"]
    return {"suite": name, "bound": bound, **func(bound)}
