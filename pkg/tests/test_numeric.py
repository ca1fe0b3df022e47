from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taxibutterfly.numeric import (
    RationalParseError,
    format_rational,
    parse_rational,
    rational_binary,
)

rationals = st.fractions(max_denominator=10**6)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("-35/11", F(-35, 11)),
        ("0", F(0, 1)),
        ("6/4", F(3, 2)),
        ("  +7 ", F(7)),
        ("-0/5", F(0)),
        (" 139 / 22", F(139, 22)),
    ],
)
def test_parse(text, expected):
    r = parse_rational(text)
    assert r == expected
    assert (r.numerator, r.denominator) == (expected.numerator, expected.denominator)


@pytest.mark.parametrize("text", ["", "1/0", "1.5", "1e3", "a", "1/-2", "--1", "1/2/3", "/2"])
def test_parse_rejects(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


def test_zero_is_canonical():
    z = parse_rational("0/7")
    assert (z.numerator, z.denominator) == (0, 1)


@pytest.mark.parametrize(
    "a, b, kind, expected",
    [
        (F(1, 3), F(1, 6), "add", F(1, 2)),
        (F(-35, 11), F(0), "mul", F(0)),
        (F(81, 22), F(-35, 11), "sub", F(151, 22)),
        (F(3, 4), F(3, 2), "div", F(1, 2)),
    ],
)
def test_binary(a, b, kind, expected):
    assert rational_binary(a, b, kind) == expected


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rational_binary(F(1), F(0), "div")


def test_format():
    assert format_rational(F(-39, 11)) == "-39/11"
    assert format_rational(F(10)) == "10"
    assert format_rational(F(0)) == "0"


@given(rationals)
def test_format_parse_roundtrip(r):
    assert parse_rational(format_rational(r)) == r


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    add = lambda x, y: rational_binary(x, y, "add")  # noqa: E731
    mul = lambda x, y: rational_binary(x, y, "mul")  # noqa: E731
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert rational_binary(a, a, "sub") == 0
    if b != 0:
        assert mul(rational_binary(a, b, "div"), b) == a


@given(rationals, rationals)
def test_order_matches_cross_multiplication(a, b):
    assert (a < b) == (a.numerator * b.denominator < b.numerator * a.denominator)
    assert sum([a < b, a == b, a > b]) == 1
