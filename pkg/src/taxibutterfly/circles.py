"""Taxicab and Euclidean circles.

A taxicab circle is a diamond with vertices on the horizontal and vertical
lines through its center. Edges are closed segments, so each vertex belongs
to two edges. Many routines work in centered coordinates ``(u, v) = p - center``.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .numeric import as_rational
from .plane import (
    COINCIDENT,
    LineEq,
    Point,
    QuarterTurn,
    ReflectAxis,
    SlopeClass,
    UniquePoint,
    apply_isometry,
    euclid_sq_distance,
    intersect_lines,
    line_through,
    taxicab_distance,
)


class InvalidChordRequest(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class TaxicabCircle:
    center: Point
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", as_rational(self.radius))
        if self.radius <= 0:
            raise ValueError(f"radius must be positive, got {self.radius}")


@dataclass(frozen=True, slots=True)
class EuclideanCircle:
    center: Point
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", as_rational(self.radius))
        if self.radius <= 0:
            raise ValueError(f"radius must be positive, got {self.radius}")


Circle = Union[TaxicabCircle, EuclideanCircle]


class Edge(enum.Enum):
    NE = "NE"
    NW = "NW"
    SW = "SW"
    SE = "SE"


# (start vertex, end vertex) counterclockwise, as unit offsets from the center
_EDGE_ENDS = {
    Edge.NE: ((1, 0), (0, 1)),
    Edge.NW: ((0, 1), (-1, 0)),
    Edge.SW: ((-1, 0), (0, -1)),
    Edge.SE: ((0, -1), (1, 0)),
}


@dataclass(frozen=True, slots=True)
class EdgeSegment:
    edge: Edge
    start: Point
    end: Point
    line: LineEq

    def contains(self, p: Point) -> bool:
        if not self.line.contains(p):
            return False
        lo, hi = sorted((self.start.x, self.end.x))
        return lo <= p.x <= hi


@functools.lru_cache(maxsize=64)
def circle_edges(c: TaxicabCircle) -> tuple[EdgeSegment, ...]:
    """The four closed edges, ordered NE, NW, SW, SE."""
    out = []
    for edge, ((sx, sy), (ex, ey)) in _EDGE_ENDS.items():
        start = Point(c.center.x + sx * c.radius, c.center.y + sy * c.radius)
        end = Point(c.center.x + ex * c.radius, c.center.y + ey * c.radius)
        out.append(EdgeSegment(edge, start, end, line_through(start, end)))
    return tuple(out)


def on_taxicab_circle(c: TaxicabCircle, p: Point) -> bool:
    return taxicab_distance(c.center, p) == c.radius


def on_euclid_circle(c: EuclideanCircle, p: Point) -> bool:
    return euclid_sq_distance(c.center, p) == c.radius * c.radius


def on_circle(c: Circle, p: Point) -> bool:
    if isinstance(c, TaxicabCircle):
        return on_taxicab_circle(c, p)
    return on_euclid_circle(c, p)


def strictly_inside(c: Circle, p: Point) -> bool:
    if isinstance(c, TaxicabCircle):
        return taxicab_distance(c.center, p) < c.radius
    return euclid_sq_distance(c.center, p) < c.radius * c.radius


# -- line / circle ----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Empty:
    pass


@dataclass(frozen=True, slots=True)
class Tangent:
    point: Point


@dataclass(frozen=True, slots=True)
class Secant:
    first: Point
    second: Point


@dataclass(frozen=True, slots=True)
class EdgeOverlap:
    edge: Edge


LineCircleIntersection = Union[Empty, Tangent, Secant, EdgeOverlap]


def line_taxicab_circle_intersections(c: TaxicabCircle, line: LineEq) -> LineCircleIntersection:
    hits: list[Point] = []
    for seg in circle_edges(c):
        res = intersect_lines(line, seg.line)
        if res is COINCIDENT:
            return EdgeOverlap(seg.edge)
        if isinstance(res, UniquePoint) and seg.contains(res.point) and res.point not in hits:
            hits.append(res.point)
    if not hits:
        return Empty()
    if len(hits) == 1:
        return Tangent(hits[0])
    # A line meets a convex polygon's boundary in at most two points unless it
    # runs along an edge, which was handled above.
    assert len(hits) == 2, hits
    return Secant(hits[0], hits[1])


def chord_second_point_taxicab(c: TaxicabCircle, a: Point, through: Point) -> Point:
    if not on_taxicab_circle(c, a):
        raise InvalidChordRequest(f"{a} is not on the circle")
    if not strictly_inside(c, through):
        raise InvalidChordRequest(f"{through} is not strictly inside the circle")
    res = line_taxicab_circle_intersections(c, line_through(a, through))
    if not isinstance(res, Secant):
        # unreachable for a line through an interior point
        raise InvalidChordRequest(f"line through {a} and {through} is not a secant: {res}")
    return res.second if res.first == a else res.first


def chord_second_point_euclid(c: EuclideanCircle, a: Point, through: Point) -> Point:
    """Second intersection of the line from ``a`` through ``through``.

    With p(t) = a + t*d the circle equation becomes |d|^2 t^2 + 2 d.(a - o) t = 0;
    t = 0 is ``a`` itself, so the other root is -2 d.(a - o) / |d|^2.
    """
    if not on_euclid_circle(c, a):
        raise InvalidChordRequest(f"{a} is not on the circle")
    if not strictly_inside(c, through):
        raise InvalidChordRequest(f"{through} is not strictly inside the circle")
    d = through - a
    w = a - c.center
    t = -2 * (d.x * w.x + d.y * w.y) / (d.x * d.x + d.y * d.y)
    return a + d.scale(t)


def chord_second_point(c: Circle, a: Point, through: Point) -> Point:
    if isinstance(c, TaxicabCircle):
        return chord_second_point_taxicab(c, a, through)
    return chord_second_point_euclid(c, a, through)


# -- symmetries ------------------------------------------------------------


class SymmetryKind(enum.Enum):
    REFLECT_VERTICAL = "ReflectVertical"
    REFLECT_HORIZONTAL = "ReflectHorizontal"
    REFLECT_DIAGONAL = "ReflectDiagonal"
    REFLECT_ANTIDIAGONAL = "ReflectAntidiagonal"
    CENTRAL = "Central"

    @property
    def is_reflection(self) -> bool:
        return self is not SymmetryKind.CENTRAL

    def __str__(self) -> str:
        return self.value


REFLECTIONS = tuple(s for s in SymmetryKind if s.is_reflection)

# the axis of ReflectVertical is the vertical line x = cx, and so on
_AXIS_SLOPE = {
    SymmetryKind.REFLECT_VERTICAL: SlopeClass.VERTICAL,
    SymmetryKind.REFLECT_HORIZONTAL: SlopeClass.HORIZONTAL,
    SymmetryKind.REFLECT_DIAGONAL: SlopeClass.DIAGONAL,
    SymmetryKind.REFLECT_ANTIDIAGONAL: SlopeClass.ANTIDIAGONAL,
}


def symmetry_isometry(c: TaxicabCircle, s: SymmetryKind):
    if s is SymmetryKind.CENTRAL:
        return QuarterTurn(c.center, 2)
    return ReflectAxis(_AXIS_SLOPE[s], c.center)


def symmetry_image(c: TaxicabCircle, s: SymmetryKind, p: Point) -> Point:
    return apply_isometry(symmetry_isometry(c, s), p)


def on_axis(c: TaxicabCircle, s: SymmetryKind, p: Point) -> bool:
    """Whether ``p`` is fixed by ``s`` (for Central: ``p`` is the center)."""
    return symmetry_image(c, s, p) == p


def symmetries_between(c: TaxicabCircle, u: Point, v: Point) -> frozenset[SymmetryKind]:
    if not (on_taxicab_circle(c, u) and on_taxicab_circle(c, v)):
        raise ValueError("both points must lie on the circle")
    return frozenset(s for s in SymmetryKind if symmetry_image(c, s, u) == v)


# -- chords with a prescribed midpoint -------------------------------------


@dataclass(frozen=True, slots=True)
class ChordLine:
    """One-parameter chord family between two parallel edges.

    Endpoints are ``base1 + t*dir1`` and ``base2 + t*dir2`` for ``lo < t < hi``.
    """

    edges: tuple[Edge, Edge]
    lo: Fraction
    hi: Fraction
    base1: Point
    dir1: Point
    base2: Point
    dir2: Point

    def chord(self, t: Fraction) -> tuple[Point, Point]:
        return self.base1 + self.dir1.scale(t), self.base2 + self.dir2.scale(t)

    def parameter_of(self, p: Point, q: Point) -> Fraction | None:
        """Parameter of chord {p, q} if it is a member of the open family."""
        for first, second in ((p, q), (q, p)):
            t = _solve_affine(self.base1, self.dir1, first)
            if t is not None and self.lo < t < self.hi and self.chord(t) == (first, second):
                return t
        return None


def _solve_affine(base: Point, direction: Point, p: Point) -> Fraction | None:
    if direction.x != 0:
        t = (p.x - base.x) / direction.x
    elif direction.y != 0:
        t = (p.y - base.y) / direction.y
    else:
        return None
    return t if base + direction.scale(t) == p else None


@dataclass(frozen=True)
class ChordFamily:
    """Every chord of a circle whose midpoint is a given point.

    ``all_diameters`` is set when that point is the center; otherwise the
    chords are the isolated ``explicit`` ones plus the open ``families``.
    """

    all_diameters: bool = False
    explicit: tuple[tuple[Point, Point], ...] = ()
    families: tuple[ChordLine, ...] = field(default_factory=tuple)

    def contains(self, p: Point, q: Point) -> bool:
        if self.all_diameters:
            return True
        if (p, q) in self.explicit or (q, p) in self.explicit:
            return True
        return any(f.parameter_of(p, q) is not None for f in self.families)

    def is_unique_chord(self) -> bool:
        return not self.all_diameters and not self.families and len(self.explicit) == 1


# edges in centered coordinates, parametrized by x
def _edge_point(edge: Edge, r: Fraction, x: Fraction) -> Point:
    if edge is Edge.NE:
        return Point(x, r - x)
    if edge is Edge.NW:
        return Point(x, r + x)
    if edge is Edge.SW:
        return Point(x, -r - x)
    return Point(x, x - r)


_EDGE_X_RANGE = {
    Edge.NE: (0, 1),
    Edge.NW: (-1, 0),
    Edge.SW: (-1, 0),
    Edge.SE: (0, 1),
}

_ADJACENT = ((Edge.NE, Edge.NW), (Edge.NW, Edge.SW), (Edge.SW, Edge.SE), (Edge.SE, Edge.NE))


def _edge_slope(edge: Edge) -> int:
    return -1 if edge in (Edge.NE, Edge.SW) else 1


def _edge_intercept(edge: Edge, r: Fraction) -> Fraction:
    return r if edge in (Edge.NE, Edge.NW) else -r


def chords_with_midpoint(c: TaxicabCircle, m: Point) -> ChordFamily:
    if not strictly_inside(c, m):
        raise ValueError(f"midpoint {m} must be strictly inside the circle")
    r = c.radius
    o = c.center
    u, v = m.x - o.x, m.y - o.y
    if u == 0 and v == 0:
        return ChordFamily(all_diameters=True)

    explicit: list[tuple[Point, Point]] = []
    for e1, e2 in _ADJACENT:
        # p = (s, k1*s + b1), q = (t, k2*t + b2), p + q = 2m
        k1, b1 = _edge_slope(e1), _edge_intercept(e1, r)
        k2, b2 = _edge_slope(e2), _edge_intercept(e2, r)
        # s + t = 2u ; k1*s + k2*t = 2v - b1 - b2 ; k1 != k2 for adjacent edges
        rhs = 2 * v - b1 - b2
        s = (rhs - k2 * 2 * u) / (k1 - k2)
        t = 2 * u - s
        lo1, hi1 = _EDGE_X_RANGE[e1]
        lo2, hi2 = _EDGE_X_RANGE[e2]
        if not (lo1 * r <= s <= hi1 * r and lo2 * r <= t <= hi2 * r):
            continue
        p = _edge_point(e1, r, s) + o
        q = _edge_point(e2, r, t) + o
        if (p, q) not in explicit and (q, p) not in explicit:
            explicit.append((p, q))

    families = []
    if u == v:
        # NW point (a, a + r), SE point (2u - a, 2u - a - r)
        lo, hi = max(-r, 2 * u - r), min(Fraction(0), 2 * u)
        if lo < hi:
            families.append(
                ChordLine(
                    (Edge.NW, Edge.SE), lo, hi,
                    Point(o.x, o.y + r), Point(1, 1),
                    Point(o.x + 2 * u, o.y + 2 * u - r), Point(-1, -1),
                )
            )
    if u == -v:
        # NE point (a, r - a), SW point (2u - a, a - r - 2u)
        lo, hi = max(Fraction(0), 2 * u), min(r, 2 * u + r)
        if lo < hi:
            families.append(
                ChordLine(
                    (Edge.NE, Edge.SW), lo, hi,
                    Point(o.x, o.y + r), Point(1, -1),
                    Point(o.x + 2 * u, o.y - r - 2 * u), Point(-1, 1),
                )
            )
    return ChordFamily(explicit=tuple(explicit), families=tuple(families))


# -- sampling / measurement --------------------------------------------------


def boundary_point(c: Circle, t) -> Point:
    """Rational point on the boundary for parameter ``t``.

    Taxicab: ``0 <= t < 4``; the integer part picks the edge counterclockwise
    from the East vertex and the fraction interpolates along it.
    Euclidean: tangent half-angle parametrization; ``t`` is any rational and
    the West pole is never produced.
    """
    t = as_rational(t)
    if isinstance(c, TaxicabCircle):
        if not 0 <= t < 4:
            raise ValueError(f"taxicab boundary parameter must lie in [0, 4), got {t}")
        k = int(t)
        frac = t - k
        start, end = _EDGE_ENDS[list(Edge)[k]]
        sx, sy = start
        ex, ey = end
        r = c.radius
        return Point(
            c.center.x + r * (sx + frac * (ex - sx)),
            c.center.y + r * (sy + frac * (ey - sy)),
        )
    d = 1 + t * t
    return Point(c.center.x + c.radius * (1 - t * t) / d, c.center.y + c.radius * 2 * t / d)


def taxicab_circumference(c: TaxicabCircle) -> Fraction:
    return sum(
        (taxicab_distance(seg.start, seg.end) for seg in circle_edges(c)),
        Fraction(0),
    )

