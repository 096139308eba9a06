"""Field arithmetic: axioms, canonical forms, parsing, square roots."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from novikov.fields import (QQ, DivisionByZero, FieldMismatch,
                            GaussianRationalField, PrimeField,
                            QuadraticField, RationalField, field_from_tag,
                            field_tag)

QI = GaussianRationalField()
QS2 = QuadraticField(2)
F7 = PrimeField(7)

FIELDS = [QQ, QI, QS2, F7]

rationals = st.builds(Fraction,
                      st.integers(min_value=-50, max_value=50),
                      st.integers(min_value=1, max_value=9))


def _elem(field, q1, q2):
    if isinstance(field, RationalField):
        return field(q1)
    if isinstance(field, (GaussianRationalField, QuadraticField)):
        return field(q1) + field(q2) * (field.i() if isinstance(
            field, GaussianRationalField) else field.sqrt_gen())
    return field.from_rational(Fraction(q1.numerator % 7))


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@settings(max_examples=40, deadline=None)
@given(a=rationals, b=rationals, c=rationals, d=rationals)
def test_field_axioms(field, a, b, c, d):
    x, y, z = _elem(field, a, b), _elem(field, c, d), _elem(field, a + c, b)
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + field.zero() == x
    assert x * field.one() == x
    assert x + (-x) == field.zero()
    if y:
        assert y * (field.one() / y) == field.one()
        assert (x / y) * y == x


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@settings(max_examples=40, deadline=None)
@given(a=rationals, b=rationals)
def test_parse_format_roundtrip(field, a, b):
    x = _elem(field, a, b)
    assert field.parse(repr(x)) == x


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@settings(max_examples=30, deadline=None)
@given(a=rationals, b=rationals)
def test_sqrt_of_square(field, a, b):
    x = _elem(field, a, b)
    r = field.try_sqrt(x * x)
    assert r is not None
    assert r * r == x * x


def test_sqrt_nonsquares():
    assert QQ.try_sqrt(QQ(2)) is None
    assert QQ.try_sqrt(QQ(-1)) is None
    assert QI.try_sqrt(QI.i()) is None


def test_sqrt_specials():
    assert QQ.try_sqrt(QQ(Fraction(9, 4))) == QQ(Fraction(3, 2))
    # Q(i): sqrt(-1) = i under the sign convention
    assert QI.try_sqrt(QI(-1)) == QI.i()
    # Q(sqrt 2): sqrt(2) is the generator
    assert QS2.try_sqrt(QS2(2)) == QS2.sqrt_gen()
    assert QS2.try_sqrt(QS2(3)) is None
    # F_7: squares are {0,1,2,4}; smaller-root convention
    assert F7.try_sqrt(F7(2)) == F7(3)
    assert F7.try_sqrt(F7(3)) is None


def test_prime_field_canonical_residues():
    assert F7(9).data == 2
    assert F7(-1).data == 6
    assert F7(Fraction(1, 2)) == F7(4)
    with pytest.raises(DivisionByZero):
        F7(Fraction(1, 7))
    with pytest.raises(DivisionByZero):
        F7.one() / F7.zero()


def test_bad_field_constructions():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        QuadraticField(4)  # not squarefree
    with pytest.raises(ValueError):
        QuadraticField(1)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        QQ(1) + F7(1)
    with pytest.raises(FieldMismatch):
        PrimeField(5)(F7(1))


def test_field_tags_roundtrip():
    for f in (QQ, QI, QS2, F7, PrimeField(3)):
        assert field_from_tag(field_tag(f)) == f
    with pytest.raises(ValueError):
        field_from_tag("r")


def test_element_text_encodings():
    assert repr(QQ(Fraction(-3, 2))) == "-3/2"
    assert repr(QI(2) + QI.i()) == "2+1*i"
    assert repr(QS2(1) + QS2.sqrt_gen()) == "1+1*sqrt(2)"
    assert repr(F7(3)) == "3 mod 7"
    with pytest.raises(FieldMismatch):
        F7.parse("3 mod 5")
    with pytest.raises(FieldMismatch):
        QS2.parse("1+1*sqrt(3)")
