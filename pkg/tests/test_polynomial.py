from fractions import Fraction

import pytest

from nobodies.polynomial import Polynomial, multiply, t


def test_multiply_examples():
    t1, t2, t3 = (t(3, k) for k in (1, 2, 3))
    assert multiply(t2, t2 * t3) == Polynomial.monomial(3, (0, 2, 1))
    p = t1 + t3
    assert multiply(p, Polynomial.constant(3)) == p
    assert multiply(t1 + t3, t1 * t2) == t1 ** 2 * t2 + t1 * t2 * t3


def test_rational_coefficients():
    t1 = t(2, 1)
    p = t1.scale(Fraction(1, 3)) + Fraction(1, 2)
    assert (p * p).terms == {(2, 0): Fraction(1, 9), (1, 0): Fraction(1, 3), (0, 0): Fraction(1, 4)}
    assert p ** 0 == 1
    assert p ** 3 == p * p * p


def test_derivative_and_restriction():
    t1, t2, t3 = (t(3, k) for k in (1, 2, 3))
    f = t1 * t2 + t3 ** 2
    assert f.derivative(3) == t3.scale(2)
    assert f.derivative(3, 2) == 2
    assert f.derivative(3, 3) == 0
    assert f.substitute_zero(3) == t1 * t2
    assert f.substitute_zero(1) == t3 ** 2
    assert f.degree_in(3) == 2


def test_ring_mismatch():
    with pytest.raises(ValueError):
        t(2, 1) + t(3, 1)


def test_str():
    t1, t2, t3 = (t(3, k) for k in (1, 2, 3))
    assert str(t1 * t2 + t3 ** 2) == "t1*t2 + t3^2"
    assert str(Polynomial(3)) == "0"
