from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tilingforge.exactnum import (
    QR3_ONE,
    SQRT3,
    QRoot3,
    QTower,
    qr3_sign,
    rat_from_str,
    rat_to_str,
    rational_sqrt,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**4)


def qroot3s():
    return st.builds(QRoot3, rationals, rationals)


def qtowers():
    return st.builds(QTower, rationals, rationals, rationals, rationals)


def test_sign_cases():
    assert qr3_sign(QRoot3(2, -1)) == 1       # 4 > 3
    assert qr3_sign(QRoot3(1, -1)) == -1      # 1 < 3
    assert qr3_sign(QRoot3(0, 0)) == 0
    assert qr3_sign(QRoot3(-2, 1)) == -1
    assert qr3_sign(QRoot3(-1, 1)) == 1
    assert qr3_sign(QRoot3(0, Fraction(-1, 7))) == -1


@given(qroot3s())
def test_sign_agrees_with_float(x):
    f = float(x)
    if abs(f) > 1e-6:  # floats can't be trusted near zero; exactness can
        assert qr3_sign(x) == (1 if f > 0 else -1)


@settings(max_examples=100)
@given(qroot3s(), qroot3s(), qroot3s())
def test_qroot3_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x
    if not x.is_zero():
        assert x * x.inverse() == QR3_ONE


@settings(max_examples=100)
@given(qtowers(), qtowers(), qtowers())
def test_qtower_field_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if not x.is_zero():
        assert x * x.inverse() == QTower(1)


def test_qtower_basis_products():
    s2 = QTower(0, 1, 0, 0)
    s3 = QTower(0, 0, 1, 0)
    s6 = QTower(0, 0, 0, 1)
    assert s2 * s3 == s6
    assert s2 * s2 == QTower(2)
    assert s3 * s3 == QTower(3)
    assert s6 * s6 == QTower(6)
    assert s2 * s6 == 2 * s3
    assert s3 * s6 == 3 * s2


def test_division():
    x = QRoot3(1, 1)
    assert (x / x) == QR3_ONE
    assert (QR3_ONE / SQRT3) * SQRT3 == QR3_ONE
    with pytest.raises(ZeroDivisionError):
        QR3_ONE / QRoot3(0, 0)


def test_ordering():
    assert SQRT3 > QRoot3(Fraction(17, 10))
    assert SQRT3 < QRoot3(Fraction(18, 10))
    assert QRoot3(5, -2) > QRoot3(2, -1) * QRoot3(2, -1)  # 5-2sqrt3 > 7-4sqrt3
    assert QRoot3(7, -4) < QRoot3(0, Fraction(1, 10))


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(0)) == 0
    assert rational_sqrt(Fraction(-1)) is None


def test_qroot3_sqrt():
    # (1 + sqrt3)^2 = 4 + 2 sqrt3
    v = QRoot3(4, 2)
    assert v.sqrt() == QRoot3(1, 1)
    assert QRoot3(3, 0).sqrt() == SQRT3
    assert QRoot3(Fraction(3, 4), 0).sqrt() == QRoot3(0, Fraction(1, 2))
    assert QRoot3(12, 0).sqrt() == 2 * SQRT3
    assert QRoot3(2, 0).sqrt() is None
    assert QRoot3(-1, 0).sqrt() is None
    # (675/49) = (15 sqrt3 / 7)^2
    assert QRoot3(Fraction(675, 49), 0).sqrt() == QRoot3(0, Fraction(15, 7))


@settings(max_examples=60)
@given(qroot3s())
def test_sqrt_roundtrip(x):
    sq = x * x
    r = sq.sqrt()
    assert r is not None
    assert r * r == sq
    assert r.sign() >= 0


def test_serialization_roundtrip():
    x = QRoot3(Fraction(-3, 7), Fraction(5, 2))
    assert QRoot3.from_json(x.to_json()) == x
    assert rat_from_str(rat_to_str(Fraction(-22, 7))) == Fraction(-22, 7)
    assert rat_to_str(Fraction(4)) == "4"
