from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import fractions_open
from partition_dynamics.cfrac import cf_expand
from partition_dynamics.farey import (
    HALF,
    TERMINAL,
    binary_sequence,
    binary_sequence_from_cf,
    depth,
    depth_from_cf,
    extended_binary_sequence,
    farey_step,
    farey_tree,
    fast_depth,
    is_rational_matrix,
    matrix_of,
    phi,
    word_matrix,
    word_to_fraction,
)
from partition_dynamics.numerics import IntMat


def test_8_19():
    x = Fraction(8, 19)
    assert binary_sequence(x) == "10100"
    assert extended_binary_sequence(x) == "101001"
    assert depth(x) == 6
    assert matrix_of(x) == IntMat([[3, 5], [7, 12]])


def test_root_and_ends():
    assert binary_sequence(HALF) == ""
    assert depth(HALF) == 1
    assert depth(1, 1) == 0
    assert farey_step(HALF) == (TERMINAL, Fraction(1))
    with pytest.raises(ValueError):
        farey_step(Fraction(1))
    with pytest.raises(ValueError):
        depth(0, 5)


def test_branches():
    assert farey_step(Fraction(2, 3)) == ("0", Fraction(1, 2))
    assert farey_step(Fraction(1, 3)) == ("1", Fraction(1, 2))
    assert phi("0", HALF) == Fraction(2, 3)
    assert phi("1", HALF) == Fraction(1, 3)


def test_tree_levels():
    tree = farey_tree(4)
    assert tree[0] == [HALF]
    assert Fraction(3, 8) in tree[3] and Fraction(5, 8) in tree[3]
    assert farey_tree(3, sort=True)[2] == [Fraction(1, 4), Fraction(2, 5), Fraction(3, 5), Fraction(3, 4)]
    with pytest.raises(ValueError):
        farey_tree(0)


def _fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("k", range(1, 10))
def test_tree_level_is_exactly_depth_k(k):
    # oracle: brute-force every reduced p/q up to the largest possible denominator F(k+2)
    level = farey_tree(k)[-1]
    assert len(level) == len(set(level)) == 2 ** (k - 1)
    brute = {
        Fraction(p, q)
        for q in range(2, _fib(k + 2) + 1)
        for p in range(1, q)
        if Fraction(p, q).denominator == q and fast_depth(p, q) == k
    }
    assert brute == set(level)


@given(fractions_open())
def test_depth_two_ways(x):
    assert depth(x) == depth_from_cf(cf_expand(x)) == fast_depth(x.numerator, x.denominator)


@given(fractions_open())
def test_sequence_from_digits(x):
    if x == HALF:
        return
    assert binary_sequence(x) == binary_sequence_from_cf(cf_expand(x))


@given(fractions_open())
def test_word_round_trip(x):
    assert word_to_fraction(binary_sequence(x)) == x


@given(st.text(alphabet="01", max_size=20))
def test_word_matrices_are_unimodular(word):
    assert word_matrix(word).det() in (1, -1)
    x = word_to_fraction(word)
    assert binary_sequence(x) == word


@given(fractions_open())
def test_matrix_of_columns_are_neighbours(x):
    m = matrix_of(x)
    (p1, p2), (q1, q2) = m.rows
    assert m.det() == 1
    assert is_rational_matrix(m)
    assert Fraction(p1 + p2, q1 + q2) == x


def test_is_rational_matrix_rejects():
    assert not is_rational_matrix(IntMat([[1, 0], [0, 1]]))
    assert not is_rational_matrix(IntMat([[5, 3], [12, 7]]))
