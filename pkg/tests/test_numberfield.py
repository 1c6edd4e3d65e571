from fractions import Fraction

import pytest

from cyweb.numberfield import (
    IrreducibilityError,
    NumberField,
    cyclotomic_field,
)


@pytest.fixture
def f5():
    return cyclotomic_field("e", 5)


def test_rationals_are_plain_fractions():
    q = NumberField.rationals()
    assert q.is_rationals
    assert q.element([Fraction(3, 2)]) == Fraction(3, 2)
    assert isinstance(q.element([5]), Fraction)


def test_fifth_root_of_unity(f5):
    e = f5.generator()
    assert e**5 == 1
    assert e**4 + e**3 + e**2 + e + 1 == 0
    assert e != 1


def test_inverse_and_division(f5):
    e = f5.generator()
    x = e**2 + 3 * e - Fraction(1, 2)
    assert x * x.inverse() == 1
    assert (x / x) == 1
    assert 1 / e == e**4  # e^5 = 1


def test_inverse_of_zero_raises(f5):
    with pytest.raises(ZeroDivisionError):
        f5.zero.inverse()


def test_mixed_scalar_arithmetic(f5):
    e = f5.generator()
    assert 2 * e == e + e
    assert e - 1 == -(1 - e)
    assert (e + Fraction(1, 3)) - Fraction(1, 3) == e


def test_is_rational_roundtrip(f5):
    x = f5.from_rational(Fraction(7, 3))
    assert x.is_rational()
    assert x.as_rational() == Fraction(7, 3)
    assert not f5.generator().is_rational()


def test_norm_like_product_is_rational(f5):
    # the product of e - 1 over all conjugates is the value of the
    # minimal polynomial's companion: here Phi_5(1) = 5 up to sign
    e = f5.generator()
    product = (e - 1) * (e**2 - 1) * (e**3 - 1) * (e**4 - 1)
    assert product.is_rational()
    assert product.as_rational() == 5


def test_reducible_minimal_polynomial_rejected():
    with pytest.raises(IrreducibilityError):
        NumberField("a", [1, 2, 1])  # (t+1)^2
    with pytest.raises(IrreducibilityError):
        NumberField("a", [-1, 0, 0, 0, 1])  # t^4 - 1
    with pytest.raises(IrreducibilityError):
        NumberField("a", [1, 2, 3, 2, 1])  # (t^2+t+1)^2
    with pytest.raises(IrreducibilityError):
        # no rational roots: only the trial-factor search catches this one
        NumberField("a", [4, 0, 0, 0, 1])  # (t^2-2t+2)(t^2+2t+2)


def test_irreducible_fields_accepted():
    NumberField("i", [1, 0, 1])  # t^2 + 1
    NumberField("c", [2, 0, 0, 1])  # t^3 + 2
    cyclotomic_field("z", 7)  # degree 6
    NumberField("a", [1, 0, 0, 0, 1])  # t^4 + 1
    NumberField("z", [1, 0, -1, 0, 1, 0, -1, 0, 1])  # degree 8 cyclotomic


def test_non_monic_rejected():
    with pytest.raises(ValueError):
        NumberField("a", [1, 0, 2])


def test_degree_cap():
    with pytest.raises(IrreducibilityError):
        NumberField("a", [3] + [0] * 8 + [1])  # degree 9


def test_field_equality_and_hash(f5):
    other = cyclotomic_field("e", 5)
    assert f5 == other
    assert hash(f5) == hash(other)
    assert f5 != cyclotomic_field("z", 5)


def test_element_equality_is_structural(f5):
    e = f5.generator()
    assert e + 1 == 1 + e
    assert hash(e + 1) == hash(1 + e)


def test_power_zero_and_negative(f5):
    e = f5.generator()
    assert e**0 == 1
    assert e**-1 == e**4
