from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taxibutterfly.plane import (
    COINCIDENT,
    PARALLEL,
    DegenerateLineError,
    LineEq,
    Point,
    QuarterTurn,
    ReflectAxis,
    SlopeClass,
    Translate,
    UniquePoint,
    apply_isometry,
    collinear,
    euclid_sq_distance,
    intersect_lines,
    line_through,
    midpoint,
    rotate_pythagorean,
    taxicab_distance,
)

coords = st.fractions(min_value=-50, max_value=50, max_denominator=60)
points = st.builds(Point, coords, coords)
isometries = st.one_of(
    st.builds(Translate, points),
    st.builds(ReflectAxis, st.sampled_from(list(SlopeClass)), points),
    st.builds(QuarterTurn, points, st.sampled_from([1, 2, 3])),
)


def P(x, y):
    return Point(F(x), F(y))


def test_taxicab_distance_examples():
    assert taxicab_distance(P(-8, 2), P(3, 7)) == 16
    assert taxicab_distance(P(0, 0), P(F(3, 2), F(-1, 2))) == 2
    assert taxicab_distance(P(4, 4), P(4, 4)) == 0


def test_euclid_sq_distance_examples():
    assert euclid_sq_distance(P(0, 0), P(3, 4)) == 25
    assert euclid_sq_distance(P(0, 0), P(F(36, 17), F(77, 17))) == 25


def test_midpoint_examples():
    assert midpoint(P(-5, 5), P(5, 5)) == P(0, 5)
    assert midpoint(P(F(-35, 11), F(75, 11)), P(F(81, 22), F(139, 22))) == P(F(1, 4), F(289, 44))


def test_point_refuses_floats():
    with pytest.raises(TypeError):
        Point(0.5, 1)


def test_line_through_examples():
    assert line_through(P(-5, 5), P(5, 5)) == LineEq(F(0), F(1), F(5))
    assert line_through(P(-1, 9), P(5, -5)) == LineEq(F(7), F(3), F(20))
    with pytest.raises(DegenerateLineError):
        line_through(P(0, 0), P(0, 0))


def test_line_normalization():
    assert LineEq.normalized(0, 2, 10) == LineEq.normalized(0, F(1, 3), F(5, 3))
    assert LineEq.normalized(-7, -3, -20) == LineEq.normalized(7, 3, 20)
    assert LineEq.normalized(0, -1, 4).b == 1
    with pytest.raises(DegenerateLineError):
        LineEq.normalized(0, 0, 1)


def test_intersect_examples():
    l1 = LineEq.normalized(13, -17, -50)
    l2 = LineEq.normalized(7, 3, 20)
    assert intersect_lines(l1, l2) == UniquePoint(P(F(95, 79), F(305, 79)))
    assert intersect_lines(LineEq.normalized(0, 1, 5), LineEq.normalized(0, 1, 6)) is PARALLEL
    assert intersect_lines(LineEq.normalized(0, 1, 5), LineEq.normalized(0, 2, 10)) is COINCIDENT


def test_collinear_examples():
    assert collinear(P(-5, 5), P(0, 5), P(5, 5))
    assert not collinear(P(-5, 5), P(1, 9), P(0, 0))
    assert collinear(P(1, 2), P(1, 2), P(7, -3))


def test_isometry_examples():
    o = P(0, 0)
    assert apply_isometry(ReflectAxis(SlopeClass.DIAGONAL, o), P(1, 2)) == P(2, 1)
    assert apply_isometry(QuarterTurn(o, 2), P(-5, 5)) == P(5, -5)
    assert apply_isometry(ReflectAxis(SlopeClass.ANTIDIAGONAL, o), P(-6, 4)) == P(-4, 6)
    assert apply_isometry(QuarterTurn(o, 1), P(1, 0)) == P(0, 1)
    assert apply_isometry(ReflectAxis(SlopeClass.VERTICAL, P(2, 0)), P(5, 3)) == P(-1, 3)


def test_quarter_turn_range():
    with pytest.raises(ValueError):
        QuarterTurn(P(0, 0), 4)


def test_rotate_pythagorean_examples():
    o = P(0, 0)
    img = rotate_pythagorean(P(1, 0), o, F(3, 5), F(4, 5))
    assert img == P(F(3, 5), F(4, 5))
    assert taxicab_distance(o, img) == F(7, 5)
    assert rotate_pythagorean(P(1, 0), o, F(0), F(1)) == apply_isometry(QuarterTurn(o, 1), P(1, 0))
    with pytest.raises(ValueError):
        rotate_pythagorean(P(1, 0), o, F(1, 2), F(1, 2))


@given(points, points, points)
def test_metric_axioms(p, q, r):
    d = taxicab_distance
    assert d(p, q) >= 0
    assert (d(p, q) == 0) == (p == q)
    assert d(p, q) == d(q, p)
    assert d(p, r) <= d(p, q) + d(q, r)


@given(points, points)
def test_midpoint_properties(p, q):
    m = midpoint(p, q)
    assert collinear(p, m, q)
    assert taxicab_distance(p, m) == taxicab_distance(m, q) == taxicab_distance(p, q) / 2


@given(isometries, points, points)
def test_isometries_preserve_taxicab_length(iso, p, q):
    assert taxicab_distance(apply_isometry(iso, p), apply_isometry(iso, q)) == taxicab_distance(p, q)


@given(isometries, points, points)
def test_isometries_are_injective(iso, p, q):
    assert (apply_isometry(iso, p) == apply_isometry(iso, q)) == (p == q)


@given(st.sampled_from(list(SlopeClass)), points, points)
def test_reflections_are_involutions(slope, anchor, p):
    iso = ReflectAxis(slope, anchor)
    assert apply_isometry(iso, apply_isometry(iso, p)) == p


@given(points, points)
def test_half_turn_is_involution(center, p):
    iso = QuarterTurn(center, 2)
    assert apply_isometry(iso, apply_isometry(iso, p)) == p


@given(points, points, st.sampled_from([1, 2, 3]))
def test_quarter_turns_compose(center, p, k):
    once = apply_isometry(QuarterTurn(center, k), p)
    back = apply_isometry(QuarterTurn(center, 4 - k), once)
    assert back == p


@given(points, points)
def test_rotation_preserves_euclid_length(p, q):
    o = P(0, 0)
    rp = rotate_pythagorean(p, o, F(3, 5), F(4, 5))
    rq = rotate_pythagorean(q, o, F(3, 5), F(4, 5))
    assert euclid_sq_distance(rp, rq) == euclid_sq_distance(p, q)


@given(points, points)
def test_line_contains_both_points(p, q):
    if p == q:
        return
    line = line_through(p, q)
    assert line.contains(p) and line.contains(q)
    assert line_through(q, p) == line
    assert intersect_lines(line, line) is COINCIDENT


@given(points, points, points, points)
def test_intersection_symmetric(a, b, c, d):
    if a == b or c == d:
        return
    l1, l2 = line_through(a, b), line_through(c, d)
    r1, r2 = intersect_lines(l1, l2), intersect_lines(l2, l1)
    assert r1 == r2
    if isinstance(r1, UniquePoint):
        assert l1.contains(r1.point) and l2.contains(r1.point)
