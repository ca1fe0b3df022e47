"""Deterministic SVG drawings of butterfly configurations.

Element order is fixed: frame, circle outline, chords AB and CD, dashed wings
AD and CB, chord PQ, then the labeled markers. Geometry attributes carry
decimals rounded half-even to 4 places; each marker also carries its exact
coordinates in ``data-x`` / ``data-y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import quoteattr

from .butterfly import ButterflyProblem, ButterflyTrace, DegenerateReason, TraceResult
from .circles import TaxicabCircle, circle_edges
from .numeric import format_rational
from .plane import Point


@dataclass(frozen=True)
class SvgOptions:
    size_px: int = 600
    background: str = "#ffffff"
    circle_color: str = "#1f4e79"
    chord_color: str = "#555555"
    wing_color: str = "#b8860b"
    pq_color: str = "#b22222"
    marker_color: str = "#000000"
    deviation_color: str = "#d62728"


def fmt_decimal(value: Fraction) -> str:
    """``value`` to 4 decimal places, ties to even, no negative zero."""
    n = round(value * 10_000)
    sign = "-" if n < 0 else ""
    q, rem = divmod(abs(n), 10_000)
    return f"{sign}{q}.{rem:04d}"


def _sx(p: Point) -> str:
    return fmt_decimal(p.x)


def _sy(p: Point) -> str:
    # screen y grows downward
    return fmt_decimal(-p.y)


def _line(elem_id: str, cls: str, p: Point, q: Point, stroke: str, width: Fraction, dashed: bool = False) -> str:
    dash = f' stroke-dasharray="{fmt_decimal(width * 4)} {fmt_decimal(width * 3)}"' if dashed else ""
    return (
        f'<line id="{elem_id}" class="{cls}" x1="{_sx(p)}" y1="{_sy(p)}" x2="{_sx(q)}" y2="{_sy(q)}" '
        f'stroke="{stroke}" stroke-width="{fmt_decimal(width)}"{dash}/>'
    )


def _wing_span(a: Point, d: Point, hit: Point | None) -> tuple[Point, Point]:
    """Segment of line AD wide enough to show where it meets PQ."""
    if hit is None:
        return a, d
    direction = d - a
    if direction.x != 0:
        t = (hit.x - a.x) / direction.x
    else:
        t = (hit.y - a.y) / direction.y
    lo, hi = min(Fraction(0), t), max(Fraction(1), t)
    return a + direction.scale(lo), a + direction.scale(hi)


def _marker(label: str, p: Point, r: Fraction, color: str, elem_id: str | None = None) -> str:
    dot = r / 60
    font = r / 14
    elem_id = elem_id or f"marker-{label}"
    return (
        f'<g id="{elem_id}" class="marker" data-label={quoteattr(label)} '
        f'data-x="{format_rational(p.x)}" data-y="{format_rational(p.y)}">'
        f'<circle cx="{_sx(p)}" cy="{_sy(p)}" r="{fmt_decimal(dot)}" fill="{color}"/>'
        f'<text x="{fmt_decimal(p.x + dot * 2)}" y="{fmt_decimal(-p.y - dot * 2)}" '
        f'font-size="{fmt_decimal(font)}" font-family="sans-serif" fill="{color}">{label}</text>'
        f"</g>"
    )


def render_svg(problem: ButterflyProblem, trace: TraceResult, options: SvgOptions | None = None) -> str:
    opts = options or SvgOptions()
    if isinstance(trace, DegenerateReason) and trace.B is None:
        raise ValueError(f"cannot draw an invalid problem: {trace}")
    c = problem.circle
    r = c.radius
    o = c.center
    half = r * Fraction(6, 5)
    side = half * 2
    stroke = r / 150

    M, B, D = trace.M, trace.B, trace.D
    X = Y = None
    if isinstance(trace, ButterflyTrace):
        X, Y = trace.X, trace.Y

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.size_px}" '
            f'height="{opts.size_px}" viewBox="{fmt_decimal(o.x - half)} {fmt_decimal(-o.y - half)} '
            f'{fmt_decimal(side)} {fmt_decimal(side)}">'
        ),
        (
            f'<rect id="frame" x="{fmt_decimal(o.x - half)}" y="{fmt_decimal(-o.y - half)}" '
            f'width="{fmt_decimal(side)}" height="{fmt_decimal(side)}" fill="{opts.background}"/>'
        ),
    ]
    if isinstance(c, TaxicabCircle):
        pts = " ".join(f"{_sx(seg.start)},{_sy(seg.start)}" for seg in circle_edges(c))
        out.append(
            f'<polygon id="circle" class="taxicab" points="{pts}" fill="none" '
            f'stroke="{opts.circle_color}" stroke-width="{fmt_decimal(stroke * 2)}"/>'
        )
    else:
        out.append(
            f'<circle id="circle" class="euclid" cx="{_sx(o)}" cy="{_sy(o)}" r="{fmt_decimal(r)}" '
            f'fill="none" stroke="{opts.circle_color}" stroke-width="{fmt_decimal(stroke * 2)}"/>'
        )
    out.append(_line("chord-AB", "chord", problem.A, B, opts.chord_color, stroke))
    out.append(_line("chord-CD", "chord", problem.C, D, opts.chord_color, stroke))
    out.append(_line("wing-AD", "wing", *_wing_span(problem.A, D, X), opts.wing_color, stroke, dashed=True))
    out.append(_line("wing-CB", "wing", *_wing_span(problem.C, B, Y), opts.wing_color, stroke, dashed=True))
    out.append(_line("chord-PQ", "chord-pq", problem.P, problem.Q, opts.pq_color, stroke * 3))

    labeled = [("P", problem.P), ("Q", problem.Q), ("A", problem.A), ("B", B), ("C", problem.C), ("D", D), ("M", M)]
    if X is not None:
        labeled += [("X", X), ("Y", Y)]
    for label, p in labeled:
        out.append(_marker(label, p, r, opts.marker_color))
    if isinstance(trace, ButterflyTrace) and trace.midXY != M:
        out.append(_marker("mid(XY)", trace.midXY, r, opts.deviation_color, elem_id="marker-midXY"))
    out.append("</svg>")
    return "\n".join(out) + "\n"
