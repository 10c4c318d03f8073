import pytest
from hypothesis import given, strategies as st

from nobodies.cartan import (
    POSITIVE_ROOT_COUNTS,
    alternative_word,
    build_root_system,
    inversion_roots,
    is_reduced,
    longest_word,
    same_element,
    simple_reflect,
)

import oracles

TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("G", 2), ("B", 3), ("C", 3), ("D", 4)]


@pytest.mark.parametrize("series,rank", TYPES)
def test_cartan_matches_textbook(series, rank):
    rs = build_root_system(series, rank)
    assert [list(r) for r in rs.cartan] == oracles.cartan_of(series, rank)
    assert sorted(rs.positive_roots) == oracles.positive_roots(oracles.cartan_of(series, rank))


def test_small_examples():
    assert build_root_system("A", 2).cartan == ((2, -1), (-1, 2))
    assert build_root_system("B", 2).cartan == ((2, -1), (-2, 2))
    assert build_root_system("G", 2).cartan == ((2, -1), (-3, 2))
    assert [len(build_root_system(s, n).positive_roots) for s, n in [("A", 2), ("B", 2), ("G", 2)]] == [3, 4, 6]


@pytest.mark.parametrize("series,rank", [("E", 6), ("E", 7), ("F", 4), ("D", 5)])
def test_exceptional_root_counts(series, rank):
    assert len(build_root_system(series, rank).positive_roots) == POSITIVE_ROOT_COUNTS(series, rank)


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("D", 2), ("E", 5), ("F", 3), ("G", 3), ("X", 2), ("A", 2.0)])
def test_invalid_types(bad):
    with pytest.raises(ValueError):
        build_root_system(*bad)


@pytest.mark.parametrize("series,rank", TYPES)
def test_symmetrizer(series, rank):
    rs = build_root_system(series, rank)
    d, c = rs.symmetrizer, rs.cartan
    for i in range(rank):
        for j in range(rank):
            assert d[i] * c[i][j] == d[j] * c[j][i]


def test_simple_reflect_examples():
    rs = build_root_system("A", 2)
    assert simple_reflect(rs, 1, (1, 0)) == (-1, 1)
    assert simple_reflect(rs, 1, (0, 3)) == (0, 3)
    with pytest.raises(IndexError):
        simple_reflect(rs, 3, (0, 0))


@pytest.mark.parametrize("series,rank", [("A", 3), ("B", 2), ("G", 2)])
@given(data=st.data())
def test_simple_reflect_involution_and_lattice(series, rank, data):
    rs = build_root_system(series, rank)
    mu = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=rank, max_size=rank)))
    i = data.draw(st.integers(1, rank))
    nu = simple_reflect(rs, i, mu)
    assert all(isinstance(x, int) for x in nu)
    assert simple_reflect(rs, i, nu) == mu
    # the invariant form is preserved
    assert rs.inner(nu, nu) == rs.inner(mu, mu)


def test_is_reduced_examples():
    a2, b2 = build_root_system("A", 2), build_root_system("B", 2)
    assert is_reduced(a2, (1, 2, 1))
    assert not is_reduced(a2, (1, 1))
    assert is_reduced(b2, (1, 2, 1, 2))
    assert is_reduced(a2, ())


@pytest.mark.parametrize("series,rank,maxlen", [("A", 2, 4), ("B", 2, 5), ("G", 2, 7), ("A", 3, 7)])
def test_is_reduced_against_brute_force(series, rank, maxlen):
    from itertools import product

    rs = build_root_system(series, rank)
    cart = oracles.cartan_of(series, rank)
    for r in range(maxlen + 1):
        for w in product(range(1, rank + 1), repeat=r):
            assert is_reduced(rs, w) == oracles.word_is_reduced(cart, w), w


@pytest.mark.parametrize("series,rank", [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("G", 2), ("A", 3)])
def test_longest_word_is_lex_min(series, rank):
    rs = build_root_system(series, rank)
    w0 = longest_word(rs)
    assert len(w0) == len(rs.positive_roots)
    words = oracles.reduced_words(oracles.cartan_of(series, rank), len(w0))
    assert w0 == min(words)


def test_longest_word_examples():
    assert longest_word(build_root_system("A", 2)) == (1, 2, 1)
    assert longest_word(build_root_system("A", 1)) == (1,)
    assert longest_word(build_root_system("B", 2)) == (1, 2, 1, 2)


@pytest.mark.parametrize("series,rank", [("A", 3), ("B", 3), ("D", 4)])
def test_prefixes_and_suffixes_of_reduced_words(series, rank):
    rs = build_root_system(series, rank)
    w0 = longest_word(rs)
    assert len(w0) == len(rs.positive_roots)
    for k in range(len(w0) + 1):
        assert is_reduced(rs, w0[:k]) and is_reduced(rs, w0[k:])


def test_inversion_roots_are_the_positive_roots_for_w0():
    rs = build_root_system("G", 2)
    assert sorted(inversion_roots(rs, longest_word(rs))) == sorted(rs.positive_roots)


@pytest.mark.parametrize("series,rank", [("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)])
def test_alternative_word(series, rank):
    rs = build_root_system(series, rank)
    for w in [longest_word(rs), longest_word(rs)[1:], longest_word(rs)[:-2]]:
        alt = alternative_word(rs, w)
        assert is_reduced(rs, alt) and same_element(rs, w, alt)


def test_alternative_word_examples():
    assert alternative_word(build_root_system("A", 2), (1, 2, 1)) == (2, 1, 2)
    assert alternative_word(build_root_system("B", 2), (1, 2, 1, 2)) == (2, 1, 2, 1)
    with pytest.raises(ValueError):
        alternative_word(build_root_system("A", 2), (1, 1))


def test_same_element():
    rs = build_root_system("A", 3)
    assert same_element(rs, (1, 3), (3, 1))
    assert not same_element(rs, (1, 2), (2, 1))


def test_coroot_pairing_of_simple_roots():
    rs = build_root_system("B", 2)
    for i in (1, 2):
        root = tuple(int(j == i - 1) for j in range(2))
        for mu in [(1, 0), (0, 1), (3, -2)]:
            assert rs.coroot_pairing(mu, root) == mu[i - 1]
