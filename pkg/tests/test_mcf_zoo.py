import pytest
from hypothesis import assume, given

from conftest import partitions
from partition_dynamics.mapdef import NEGATIVE, BoundaryError, SignedPartition, builtin_mapdef
from partition_dynamics.mcf_zoo import (
    ClassifierVerdict,
    cassaigne_step,
    classify,
    conjugation_diagram_holds,
    find_conjugation_failure,
    map_orbit,
    monkemeyer_step,
    resolve_map,
    t12e12_step,
    twin_step,
)
from partition_dynamics.partitions import Partition

COUNTER = Partition((7, 5, 4), (3, 2, 4))


def test_monkemeyer_counterexample():
    branch, out = monkemeyer_step(COUNTER)
    assert branch == "0"
    assert out == SignedPartition((5, 3, 1), (9, 3, -7))
    assert out.weight == COUNTER.weight == 47


def test_cassaigne_counterexample():
    branch, out = cassaigne_step(COUNTER)
    assert out == SignedPartition((5, 4, 2), (5, 7, -3))
    assert out.weight == 47 and not out.nonnegative


def test_map_orbit_flags_negative():
    rows = map_orbit(resolve_map("monkemeyer"), COUNTER.parts, COUNTER.mults)
    assert [r.label for r in rows] == ["0", NEGATIVE]


FORMULAS = {
    "monkemeyer": monkemeyer_step,
    "cassaigne": cassaigne_step,
    "t12e12": t12e12_step,
    "t13_12_12": lambda lam: twin_step("t13_12_12", lam),
    "t132_12_e": lambda lam: twin_step("t132_12_e", lam),
}


@pytest.mark.parametrize("name", sorted(FORMULAS))
@given(lam=partitions(min_parts=3, max_parts=3, max_part=90, positive=False))
def test_formulas_match_matrices(name, lam):
    try:
        label, out = FORMULAS[name](lam)
    except BoundaryError:
        with pytest.raises(BoundaryError):
            builtin_mapdef(name).step(lam.parts, lam.mults)
        return
    ref_label, ref = builtin_mapdef(name).step(lam.parts, lam.mults)
    assert label == ref_label
    assert (tuple(out.parts), tuple(out.mults)) == (ref.parts, ref.mults)


@given(partitions(min_parts=3, max_parts=3, max_part=90, positive=False))
def test_twins_share_images(lam):
    n = lam.parts
    assume(n[1] + n[2] != n[0] and 2 * n[2] != n[1])
    from partition_dynamics.triangle import tri_step

    tri_label, tri_out = tri_step(lam)
    twin_label, twin_out = twin_step("t13_12_12", lam)
    assert twin_out == tri_out and {tri_label, twin_label} == {"0", "1"}
    t_label, t_out = t12e12_step(lam)
    twin_label, twin_out = twin_step("t132_12_e", lam)
    assert twin_out == t_out and {t_label, twin_label} == {"0", "1"}


def test_classifier():
    for name in ("monkemeyer", "cassaigne"):
        verdict = classify(name, 40)
        assert not verdict.partition_safe
        ce = verdict.counterexample
        assert ce["root"] == {"parts": [4, 2, 1], "mults": [1, 0, 0]}
        assert min(ce["output"]["mults"]) < 0
    for name in ("triangle", "t12e12", "t13_12_12", "t132_12_e"):
        assert classify(name, 40).partition_safe


def test_verdict_requires_counterexample():
    with pytest.raises(ValueError):
        ClassifierVerdict("x", 3, 10, False, 5)


def test_t12e12_breaks_conjugation():
    lam, branch = find_conjugation_failure("t12e12", 15)
    assert not conjugation_diagram_holds(resolve_map("t12e12"), lam, branch)
    assert find_conjugation_failure("triangle", 20) is None


def test_three_parts_required():
    with pytest.raises(ValueError):
        monkemeyer_step(Partition((5, 3), (1, 1)))
    with pytest.raises(ValueError):
        twin_step("brun", COUNTER)
