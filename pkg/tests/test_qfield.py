from fractions import Fraction

import pytest

from epwcalc.qfield import ONE, ZERO, ParametricScalar, rational_sqrt

Q = ParametricScalar.q()


def test_canonical_form_reduces_common_factors():
    assert Q / Q == ONE
    assert (Q ** 2 - 1) / (Q - 1) == Q + 1
    # monic denominator: 2/(2q) and 1/q are the same element
    assert ParametricScalar((0, 2)) / ParametricScalar((0, 0, 2)) == 1 / Q


def test_constant_embedding():
    half = ParametricScalar(Fraction(1, 2))
    assert half + half == ONE
    assert half.is_constant
    assert half.as_fraction() == Fraction(1, 2)
    assert ZERO.as_fraction() == 0
    assert not ZERO
    assert ONE


def test_field_operations():
    a = 3 * Q ** 2 - Q + 1
    b = Q + 5
    c = 2 - Q ** 3
    assert (a + b) * c == a * c + b * c
    assert a - a == ZERO
    assert (a / b) * b == a
    assert a * b / (b * a) == ONE


def test_power():
    assert Q ** 0 == ONE
    assert Q ** 3 == Q * Q * Q
    assert Q ** -2 == 1 / (Q * Q)
    with pytest.raises(ZeroDivisionError):
        ZERO ** -1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ParametricScalar(1, 0)


def test_evaluate():
    x = 80 / (3 * Q)
    assert x.evaluate(4) == Fraction(20, 3)
    assert (Q ** 2).evaluate(Fraction(-3, 2)) == Fraction(9, 4)
    pole = 1 / (Q - 2)
    with pytest.raises(ZeroDivisionError):
        pole.evaluate(2)


def test_as_fraction_rejects_nonconstant():
    with pytest.raises(ValueError):
        Q.as_fraction()
    assert not Q.is_constant


def test_str_clears_denominators():
    assert str(-160 / Q ** 2) == "-160/q^2"
    assert str(80 / (3 * Q)) == "80/(3*q)"
    assert str(15 * Q ** 3) == "15*q^3"
    assert str(ZERO) == "0"


def test_hash_matches_equality():
    assert hash(Q / 2) == hash(ParametricScalar((0, Fraction(1, 2))))
    assert len({Q, Q * 1, Q ** 1}) == 1


def test_rational_sqrt():
    assert rational_sqrt(Fraction(225, 16)) == Fraction(15, 4)
    assert rational_sqrt(0) == 0
    assert rational_sqrt(1) == 1
    assert rational_sqrt(Fraction(84)) is None
    assert rational_sqrt(2) is None
    assert rational_sqrt(-4) is None
