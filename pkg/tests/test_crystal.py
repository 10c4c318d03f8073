from collections import Counter
from fractions import Fraction

import pytest

from nobodies.cartan import build_root_system, longest_word
from nobodies.crystal import (
    LSPath,
    crystal_level_sets,
    demazure_crystal,
    eps,
    full_crystal,
    phi,
    root_e,
    root_f,
    straight_path,
    string_parametrization,
    wt,
)

import oracles

A2 = build_root_system("A", 2)
SL3_STRINGS = {(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 1, 1), (2, 1, 0), (0, 2, 1), (1, 2, 1)}

MATRIX = [("A", 2, (1, 1)), ("A", 2, (2, 1)), ("A", 2, (2, 2)), ("A", 3, (1, 1, 1)), ("B", 2, (1, 1)), ("C", 2, (1, 1)), ("G", 2, (1, 1)), ("B", 2, (2, 2))]


def test_straight_path_basics():
    assert wt(straight_path((0, 0))) == (0, 0)
    b = straight_path((2, 1))
    assert wt(b) == (2, 1)
    for i in (1, 2):
        assert eps(b, i) == 0
        assert phi(b, i) == (2, 1)[i - 1]
        assert root_e(A2, b, i) is None
    with pytest.raises(ValueError):
        straight_path((1, -1))


def test_a1_two_element_crystal():
    rs = build_root_system("A", 1)
    b = straight_path((1,))
    c = root_f(rs, b, 1)
    assert wt(c) == (-1,)
    assert root_f(rs, c, 1) is None
    assert root_e(rs, c, 1) == b


def test_path_normalisation():
    p = LSPath.from_segments([((1, 0), Fraction(1, 2)), ((1, 0), Fraction(1, 2)), ((0, 1), 0)])
    assert p == straight_path((1, 0))
    with pytest.raises(ValueError):
        LSPath.from_segments([((1, 0), Fraction(1, 2))])


@pytest.mark.parametrize("series,rank,lam", MATRIX)
def test_crystal_axioms_on_every_element(series, rank, lam):
    rs = build_root_system(series, rank)
    elements = full_crystal(rs, lam)
    for b in elements:
        w = wt(b)
        for i in range(1, rank + 1):
            alpha = rs.simple_root_weight(i)
            assert phi(b, i) - eps(b, i) == w[i - 1]
            f = root_f(rs, b, i)
            if f is None:
                assert phi(b, i) == 0
            else:
                assert f in elements
                assert wt(f) == tuple(x - a for x, a in zip(w, alpha))
                assert eps(f, i) == eps(b, i) + 1
                assert phi(f, i) == phi(b, i) - 1
                assert root_e(rs, f, i) == b
            e = root_e(rs, b, i)
            if e is None:
                assert eps(b, i) == 0
            else:
                assert root_f(rs, e, i) == b
            # eps and phi count the string through b
            n, c = 0, b
            while (c := root_e(rs, c, i)) is not None:
                n += 1
            assert n == eps(b, i)


@pytest.mark.parametrize("series,rank,lam", MATRIX)
def test_full_crystal_character(series, rank, lam):
    rs = build_root_system(series, rank)
    char = Counter(wt(b) for b in full_crystal(rs, lam))
    assert dict(char) == oracles.freudenthal(oracles.cartan_of(series, rank), lam)


@pytest.mark.parametrize(
    "series,rank,lam,word",
    [
        ("A", 2, (1, 1), ()),
        ("A", 2, (1, 1), (1,)),
        ("A", 2, (1, 1), (1, 2)),
        ("A", 2, (2, 1), (2, 1, 2)),
        ("A", 3, (1, 1, 1), (1, 2, 1)),
        ("A", 3, (1, 1, 1), (2, 1, 3, 2)),
        ("A", 3, (1, 1, 1), (1, 2, 1, 3, 2)),
        ("A", 3, (2, 2, 2), (1, 2, 1, 3, 2)),
        ("B", 2, (1, 1), (2, 1, 2)),
        ("C", 2, (2, 1), (1, 2, 1)),
        ("G", 2, (1, 1), (1, 2, 1, 2)),
        ("G", 2, (1, 1), (1, 2, 1, 2, 1, 2)),
    ],
)
def test_demazure_crystal_character_and_injectivity(series, rank, lam, word):
    rs = build_root_system(series, rank)
    crys = demazure_crystal(rs, lam, word)
    char = Counter(wt(b) for b in crys.elements)
    assert char == oracles.demazure_character(oracles.cartan_of(series, rank), lam, word)
    strings = [string_parametrization(rs, b, word) for b in crys.elements]
    assert len(set(strings)) == len(strings)
    # Demazure crystals are closed under raising operators
    for b in crys.elements:
        for i in range(1, rank + 1):
            e = root_e(rs, b, i)
            assert e is None or e in crys.elements


def test_sl3_examples():
    crys = demazure_crystal(A2, (1, 1), (1, 2, 1))
    assert len(crys) == len(full_crystal(A2, (1, 1))) == 8
    assert crys.elements == demazure_crystal(A2, (1, 1), (2, 1, 2)).elements
    assert len(demazure_crystal(A2, (1, 1), (1,))) == 2
    assert demazure_crystal(A2, (1, 1), ()).elements == {straight_path((1, 1))}
    assert {string_parametrization(A2, b, (1, 2, 1)) for b in crys.elements} == SL3_STRINGS
    lowest = next(b for b in crys.elements if wt(b) == (-1, -1))
    assert string_parametrization(A2, lowest, (1, 2, 1)) == (1, 2, 1)
    assert eps(lowest, 1) == 1
    assert string_parametrization(A2, straight_path((1, 1)), (1, 2, 1)) == (0, 0, 0)


def test_string_outside_demazure_crystal():
    lowest = next(b for b in full_crystal(A2, (1, 1)) if wt(b) == (-1, -1))
    with pytest.raises(ValueError):
        string_parametrization(A2, lowest, (1,))


def test_unreduced_word_rejected():
    with pytest.raises(ValueError):
        demazure_crystal(A2, (1, 1), (2, 2))


@pytest.mark.parametrize("series,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_word_independence(series, rank):
    rs = build_root_system(series, rank)
    w0 = longest_word(rs)
    from nobodies.cartan import alternative_word

    alt = alternative_word(rs, w0)
    assert demazure_crystal(rs, rs.rho, w0).elements == demazure_crystal(rs, rs.rho, alt).elements


def test_level_sets():
    levels = crystal_level_sets(A2, (1, 1), (1, 2, 1), 2)
    assert levels[1] == SL3_STRINGS
    assert len(levels[2]) == 27
    assert crystal_level_sets(A2, (0, 0), (1, 2, 1), 2) == {1: {(0, 0, 0)}, 2: {(0, 0, 0)}}
    with pytest.raises(ValueError):
        crystal_level_sets(A2, (1, 1), (1, 2, 1), 0)
