import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import exact_scalars, rationals
from walgebra.scalars import (
    EXACT,
    FLOAT,
    ParseError,
    QSqrt2,
    ScalarDivisionError,
    format_scalar,
    parse_scalar,
    scalar_arith,
    sqrt2,
)

R2 = QSqrt2(0, 1)


def test_conjugate_product():
    assert scalar_arith(QSqrt2(1, 1), QSqrt2(1, -1), "mul") == QSqrt2(-1, 0)


def test_sqrt2_squared():
    assert scalar_arith(R2, R2, "mul") == QSqrt2(2)
    assert sqrt2(exact=True) * sqrt2(exact=True) == 2


def test_division_multiplies_back():
    q = scalar_arith(QSqrt2(1), R2, "div")
    assert q == QSqrt2(0, Fraction(1, 2))
    assert q * R2 == 1


def test_exact_sqrt2_representation():
    s = sqrt2(exact=True)
    assert (s.a, s.b) == (0, 1)


def test_float_sqrt2_within_4_ulp():
    s = sqrt2()
    assert abs(s * s - 2.0) <= 4 * math.ulp(2.0)


@pytest.mark.parametrize("field", [EXACT, FLOAT])
def test_division_by_zero_raises(field):
    with pytest.raises(ScalarDivisionError):
        scalar_arith(field.one, field.zero, "div", field)


def test_float_division_below_tolerance_raises():
    with pytest.raises(ScalarDivisionError):
        scalar_arith(1.0, 1e-12, "div")
    assert scalar_arith(1.0, 4.0, "div") == 0.25


def test_lowest_terms_and_canonical_sign():
    x = QSqrt2(Fraction(6, -8), Fraction(10, 4))
    assert x.a == Fraction(-3, 4) and x.b == Fraction(5, 2)
    assert x.a.denominator > 0
    assert QSqrt2(Fraction(2, 4), 0) == QSqrt2(Fraction(1, 2))
    assert hash(QSqrt2(3)) == hash(3) == hash(Fraction(3))


@given(exact_scalars(), exact_scalars(), exact_scalars())
def test_field_axioms_exact(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a and a * 1 == a and a - a == 0
    if a:
        assert a * a.reciprocal() == 1
        assert (b / a) * a == b


@given(exact_scalars(), exact_scalars())
def test_order_agrees_with_float(a, b):
    if abs(float(a) - float(b)) > 1e-9:
        assert (a < b) == (float(a) < float(b))
    assert (a.sign() == 0) == (not a)


@given(exact_scalars(), exact_scalars())
def test_float_conversion_commutes_with_arithmetic(a, b):
    for exact, approx in [
        (a + b, float(a) + float(b)),
        (a - b, float(a) - float(b)),
        (a * b, float(a) * float(b)),
    ]:
        assert math.isclose(float(exact), approx, rel_tol=1e-12, abs_tol=1e-12)
    if b:
        assert math.isclose(float(a / b), float(a) / float(b), rel_tol=1e-12, abs_tol=1e-12)


@given(exact_scalars())
def test_text_round_trip_exact(a):
    assert parse_scalar(format_scalar(a), exact=True) == a


@given(st.floats(-1e6, 1e6, allow_nan=False))
def test_text_round_trip_float(x):
    assert parse_scalar(format_scalar(x)) == x


@pytest.mark.parametrize(
    "text, a, b",
    [
        ("1/2", Fraction(1, 2), 0),
        ("-3", -3, 0),
        ("sqrt2", 0, 1),
        ("-sqrt2", 0, -1),
        ("-1/4*sqrt2", 0, Fraction(-1, 4)),
        ("1/2+1/4*sqrt2", Fraction(1, 2), Fraction(1, 4)),
        ("1 - sqrt2", 1, -1),
        (" 3 + 2/3 * sqrt2 ", 3, Fraction(2, 3)),
    ],
)
def test_parse_exact(text, a, b):
    assert parse_scalar(text, exact=True) == QSqrt2(a, b)


@pytest.mark.parametrize(
    "text, pos",
    [("1/2+", 4), ("1/0", 2), ("abc", 0), ("1.5", 1), ("1 2", 2), ("2*", 1)],
)
def test_parse_exact_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_scalar(text, exact=True)
    assert info.value.position == pos
    assert info.value.annotated().splitlines()[-1] == "  " + " " * pos + "^"


def test_format_forms():
    assert format_scalar(QSqrt2(Fraction(1, 2), Fraction(-1, 4))) == "1/2-1/4*sqrt2"
    assert format_scalar(QSqrt2(0, -1)) == "-sqrt2"
    assert format_scalar(-0.0) == "0"
    assert format_scalar(2.5) == "2.5"


@given(rationals(), rationals())
def test_sign_exact(p, q):
    x = QSqrt2(p, q)
    expected = (float(p) + float(q) * math.sqrt(2) > 0) - (float(p) + float(q) * math.sqrt(2) < 0)
    assert x.sign() == expected
