import numpy as np
import pytest

from partition_dynamics.mapdef import (
    BOUNDARY,
    BUILTIN_MAPS,
    NEGATIVE,
    BoundaryError,
    builtin_mapdef,
    load_mapdef,
    loads_mapdef,
    strict_roots,
    sweep,
)

TOY = """
name = "toy"
dim = 2
[[branch]]
label = "0"
when = [-1, 2]
parts = [[0, 1], [1, -1]]
mults = [[1, 1], [1, 0]]
[[branch]]
label = "1"
when = [1, -2]
parts = [[1, -1], [0, 1]]
mults = [[1, 0], [1, 1]]
"""


@pytest.mark.parametrize("name", BUILTIN_MAPS)
def test_builtins_load_and_round_trip(name):
    mapdef = builtin_mapdef(name)
    assert mapdef.dim == 3
    assert loads_mapdef(mapdef.to_toml()) == mapdef


@pytest.mark.parametrize("name", ["triangle", "t12e12", "t13_12_12", "t132_12_e"])
def test_safe_maps_preserve_weight(name):
    assert all(b.weight_preserving() for b in builtin_mapdef(name).branches)


@pytest.mark.parametrize("name", ["monkemeyer", "cassaigne"])
def test_unsafe_maps_still_preserve_weight(name):
    # the failure is negativity, not weight
    assert all(b.weight_preserving() for b in builtin_mapdef(name).branches)


def test_toy_map_is_farey(tmp_path):
    path = tmp_path / "toy.toml"
    path.write_text(TOY)
    toy = load_mapdef(path)
    assert toy.step((19, 8), (1, 0))[0] == "1"
    assert toy.step((19, 8), (1, 0))[1].parts == (11, 8)
    with pytest.raises(BoundaryError):
        toy.step((2, 1), (1, 1))
    with pytest.raises(ValueError):
        toy.step((3, 2, 1), (1, 1, 1))


def test_bad_definitions():
    with pytest.raises(ValueError):
        loads_mapdef('name = "x"\ndim = 2\n')
    with pytest.raises(ValueError):
        loads_mapdef(TOY.replace("dim = 2", "dim = 3"))
    with pytest.raises(KeyError):
        builtin_mapdef("selmer")


def test_strict_roots():
    roots = strict_roots(3, 5)
    assert roots.tolist() == [[3, 2, 1], [4, 2, 1], [4, 3, 1], [4, 3, 2], [5, 2, 1], [5, 3, 1], [5, 3, 2], [5, 4, 1], [5, 4, 2], [5, 4, 3]]
    assert strict_roots(3, 2).shape == (0, 3)


def test_sweep_matches_scalar_steps():
    mapdef = builtin_mapdef("cassaigne")
    roots = strict_roots(3, 30)
    result = sweep(mapdef, roots)
    for i, root in enumerate(roots.tolist()):
        parts, mults, steps = tuple(root), (1, 0, 0), 0
        while True:
            try:
                _, out = mapdef.step(parts, mults)
            except BoundaryError:
                reason = BOUNDARY
                break
            steps += 1
            if not out.nonnegative:
                reason = NEGATIVE
                break
            parts, mults = out.parts, out.mults
        assert (result.steps[i], result.reason[i]) == (steps, reason)


def test_sweep_overflow_guard():
    mapdef = builtin_mapdef("triangle")
    big = np.array([[2**61, 2**60, 2**59 + 1]], dtype=np.int64)
    with pytest.raises(OverflowError):
        sweep(mapdef, big, mults=np.array([[2**62, 1, 2**62]]))
    # just inside the limit the sweep runs
    sweep(mapdef, big, mults=np.array([[2**61, 1, 2**61]]), max_steps=1)
