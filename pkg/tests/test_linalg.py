from fractions import Fraction

from hypothesis import given, strategies as st

from nobodies import linalg

small = st.integers(-5, 5)


def test_rref_and_rank():
    red, piv = linalg.rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert piv == [0, 1]
    assert red[0] == [1, 0, 1] and red[1] == [0, 1, 1]
    assert linalg.rank([[0, 0], [0, 0]]) == 0


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None
    assert linalg.solve([[2, 0], [0, 4]], [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_roundtrip(m):
    if linalg.rank(m) < 3:
        return
    inv = linalg.inverse(m)
    assert linalg.matmul(m, inv) == linalg.identity(3)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5))
def test_independent_columns_span(m):
    cols = linalg.independent_columns(m)
    assert len(cols) == linalg.rank(m)
    sub = [[row[c] for c in cols] for row in m]
    assert linalg.rank(sub) == len(cols)
