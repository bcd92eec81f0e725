"""Domino insertion, its inverse, and the two-row shape criterion."""

import itertools

import pytest
from hypothesis import given, strategies as st

from blobcell import domino, weylb
from blobcell.domino import DominoTableau, domino_insert, domino_reverse


def windows(n_max=6):
    return st.integers(1, n_max).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).flatmap(
            lambda p: st.lists(st.sampled_from([1, -1]),
                               min_size=n, max_size=n).map(
                lambda signs: tuple(s * x for s, x in zip(signs, p)))))


def test_single_letters():
    p, q = domino_insert((1,))
    assert p.shape() == (2,) and q.shape() == (2,)
    p, q = domino_insert((-1,))
    assert p.shape() == (1, 1) and q.shape() == (1, 1)


def test_worked_example():
    p, q = domino_insert((2, 3, -1))
    assert p.shape() == q.shape() == (4, 2)
    assert domino_reverse(p, q) == (2, 3, -1)


@given(windows())
def test_reverse_roundtrip(w):
    p, q = domino_insert(w)
    assert p.shape() == q.shape()
    p.check_standard()
    q.check_standard()
    assert domino_reverse(p, q) == w


@given(windows(5))
def test_q_is_p_of_inverse(w):
    _, q = domino_insert(w)
    p_inv, _ = domino_insert(weylb.inverse(w))
    assert q == p_inv


def test_bijection_small():
    for n in (1, 2, 3, 4):
        seen = {}
        for w in weylb.enumerate_wn(n):
            p, q = domino_insert(w)
            key = (tuple(p.dominoes), tuple(q.dominoes))
            assert key not in seen
            seen[key] = w
        assert len(seen) == 2 ** n * len(list(itertools.permutations(
            range(n))))


def test_two_rows_iff_wb():
    for n in (1, 2, 3, 4):
        for w in weylb.enumerate_wn(n):
            assert (len(domino.domino_shape(w)) <= 2) \
                == weylb.is_in_wb_by_words(w)


def test_json_roundtrip():
    p, _ = domino_insert((3, -1, 2, -4))
    assert DominoTableau.from_json(p.to_json()) == p


def test_rsk_type_a():
    p, q = domino.rsk_type_a((2, 1, 3))
    assert p == ((1, 3), (2,))
    assert q == ((1, 3), (2,))
    p, q = domino.rsk_type_a((3, 2, 1))
    assert p == ((1,), (2,), (3,))
