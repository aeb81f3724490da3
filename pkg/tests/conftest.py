from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from partition_dynamics.partitions import Partition

GOLDEN = Path(__file__).parent / "golden"

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, min_parts=1, max_parts=5, max_part=40, max_mult=6, positive=True):
    m = draw(st.integers(min_parts, max_parts))
    parts = sorted(draw(st.sets(st.integers(1, max_part), min_size=m, max_size=m)), reverse=True)
    lo = 1 if positive else 0
    mults = draw(st.lists(st.integers(lo, max_mult), min_size=m, max_size=m).filter(any))
    return Partition(parts, mults)


@st.composite
def fractions_open(draw, max_den=500):
    from fractions import Fraction

    q = draw(st.integers(2, max_den))
    p = draw(st.integers(1, q - 1))
    return Fraction(p, q)


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN / name).read_text()

    return read


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
