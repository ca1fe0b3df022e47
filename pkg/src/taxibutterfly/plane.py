"""Exact plane primitives: points, lines, the two metrics and the isometries
that keep taxicab length intact."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .numeric import as_rational, format_rational


@dataclass(frozen=True, slots=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k: Fraction) -> "Point":
        return Point(self.x * k, self.y * k)

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


class DegenerateLineError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class LineEq:
    """The locus ``a*x + b*y = c``, kept in normalized integer form.

    Build through :meth:`normalized` (or :func:`line_through`) so that two
    descriptions of one line compare equal.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def normalized(cls, a, b, c) -> "LineEq":
        a, b, c = (as_rational(v) for v in (a, b, c))
        if a == 0 and b == 0:
            raise DegenerateLineError("a and b cannot both vanish")
        lcm = math.lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = (int(v * lcm) for v in (a, b, c))
        g = math.gcd(ia, ib, ic)
        lead = ia if ia != 0 else ib
        if lead < 0:
            g = -g
        return cls(Fraction(ia // g), Fraction(ib // g), Fraction(ic // g))

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y == self.c

    def __str__(self) -> str:
        return f"{format_rational(self.a)}*x + {format_rational(self.b)}*y = {format_rational(self.c)}"


def taxicab_distance(p: Point, q: Point) -> Fraction:
    return abs(q.x - p.x) + abs(q.y - p.y)


def euclid_sq_distance(p: Point, q: Point) -> Fraction:
    dx = q.x - p.x
    dy = q.y - p.y
    return dx * dx + dy * dy


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def line_through(p: Point, q: Point) -> LineEq:
    if p == q:
        raise DegenerateLineError(f"line through coincident points {p}")
    a = q.y - p.y
    b = p.x - q.x
    return LineEq.normalized(a, b, a * p.x + b * p.y)


@dataclass(frozen=True, slots=True)
class UniquePoint:
    point: Point


class _Marker:
    __slots__ = ("_name",)

    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


PARALLEL = _Marker("Parallel")
COINCIDENT = _Marker("Coincident")

Intersection = Union[UniquePoint, _Marker]


def intersect_lines(l1: LineEq, l2: LineEq) -> Intersection:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return COINCIDENT if l1 == l2 else PARALLEL
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return UniquePoint(Point(x, y))


def orientation(p: Point, q: Point, r: Point) -> Fraction:
    """Twice the signed area of triangle pqr (positive when counterclockwise)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return orientation(p, q, r) == 0


# -- isometries -------------------------------------------------------------


class SlopeClass(enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL = "diagonal"
    ANTIDIAGONAL = "antidiagonal"


@dataclass(frozen=True, slots=True)
class Translate:
    vector: Point


@dataclass(frozen=True, slots=True)
class ReflectAxis:
    """Reflection across the line of ``slope_class`` through ``anchor``."""

    slope_class: SlopeClass
    anchor: Point


@dataclass(frozen=True, slots=True)
class QuarterTurn:
    """Counterclockwise rotation by ``k`` quarter turns about ``center``.

    In taxicab angle measure a quarter turn is 2 t-radians, so k = 1, 2, 3
    stand for 2, 4 and 6 t-radians; k = 2 is the point reflection.
    """

    center: Point
    k: int

    def __post_init__(self):
        if self.k not in (1, 2, 3):
            raise ValueError(f"quarter-turn count must be 1, 2 or 3, got {self.k}")


Isometry = Union[Translate, ReflectAxis, QuarterTurn]


def _reflect_centered(slope: SlopeClass, u: Fraction, v: Fraction) -> tuple[Fraction, Fraction]:
    if slope is SlopeClass.HORIZONTAL:
        return u, -v
    if slope is SlopeClass.VERTICAL:
        return -u, v
    if slope is SlopeClass.DIAGONAL:
        return v, u
    return -v, -u


def _turn_centered(k: int, u: Fraction, v: Fraction) -> tuple[Fraction, Fraction]:
    for _ in range(k):
        u, v = -v, u
    return u, v


def apply_isometry(iso: Isometry, p: Point) -> Point:
    if isinstance(iso, Translate):
        return p + iso.vector
    if isinstance(iso, ReflectAxis):
        o = iso.anchor
        u, v = _reflect_centered(iso.slope_class, p.x - o.x, p.y - o.y)
    elif isinstance(iso, QuarterTurn):
        o = iso.center
        u, v = _turn_centered(iso.k, p.x - o.x, p.y - o.y)
    else:
        raise TypeError(f"not an isometry: {iso!r}")
    return Point(o.x + u, o.y + v)


def rotate_pythagorean(p: Point, center: Point, cos: Fraction, sin: Fraction) -> Point:
    """Rotate ``p`` about ``center`` by the angle with the given exact cosine and sine.

    Only rotations with rational (cos, sin), i.e. Pythagorean angles, are
    expressible exactly.
    """
    cos, sin = as_rational(cos), as_rational(sin)
    if cos * cos + sin * sin != 1:
        raise ValueError(f"cos^2 + sin^2 must equal 1 (got cos={cos}, sin={sin})")
    u = p.x - center.x
    v = p.y - center.y
    return Point(center.x + cos * u - sin * v, center.y + sin * u + cos * v)
