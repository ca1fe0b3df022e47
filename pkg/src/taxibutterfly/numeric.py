"""Exact rational scalars.

Every coordinate and distance in the package is a :class:`fractions.Fraction`.
``Fraction`` already keeps itself in lowest terms with a positive denominator,
so structural equality is numeric equality; this module only adds a strict
parser, the canonical text rendering and a small dispatch helper.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")

_BINARY_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


class RationalParseError(ValueError):
    """Text does not denote a rational number."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional sign, surrounding whitespace)."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise RationalParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def rational_binary(a: Fraction, b: Fraction, kind: str) -> Fraction:
    try:
        op = _BINARY_OPS[kind]
    except KeyError:
        raise ValueError(f"unknown operation {kind!r}") from None
    return op(a, b)


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and rational strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")
