"""Problem files: UTF-8, one ``key = value`` per line, ``#`` comments.

Required keys, each exactly once: geometry (taxicab | euclid), center, radius,
P, Q, A, C. Points are two rationals separated by a comma::

    geometry = taxicab
    center = 0, 0
    radius = 10
    P = -35/11, 75/11
"""

from __future__ import annotations

from .butterfly import ButterflyProblem
from .circles import EuclideanCircle, TaxicabCircle
from .numeric import RationalParseError, format_rational, parse_rational
from .plane import Point

KEYS = ("geometry", "center", "radius", "P", "Q", "A", "C")
POINT_KEYS = ("center", "P", "Q", "A", "C")


class ConfigError(ValueError):
    pass


def parse_point(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise ConfigError(f"expected 'x, y', got {text.strip()!r}")
    return Point(parse_rational(parts[0]), parse_rational(parts[1]))


def parse_config(text: str) -> ButterflyProblem:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        if key not in KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        values[key] = value.strip()
    missing = [k for k in KEYS if k not in values]
    if missing:
        raise ConfigError(f"missing keys: {', '.join(missing)}")

    try:
        pts = {k: parse_point(values[k]) for k in POINT_KEYS}
        radius = parse_rational(values["radius"])
    except RationalParseError as exc:
        raise ConfigError(str(exc)) from None
    geometry = values["geometry"]
    if geometry == "taxicab":
        cls = TaxicabCircle
    elif geometry == "euclid":
        cls = EuclideanCircle
    else:
        raise ConfigError(f"geometry must be 'taxicab' or 'euclid', got {geometry!r}")
    try:
        circle = cls(pts["center"], radius)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return ButterflyProblem(circle, pts["P"], pts["Q"], pts["A"], pts["C"])


def load_config(path) -> ButterflyProblem:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def _point_value(p: Point) -> str:
    return f"{format_rational(p.x)}, {format_rational(p.y)}"


def format_config(problem: ButterflyProblem, comment: str | None = None) -> str:
    geometry = "taxicab" if isinstance(problem.circle, TaxicabCircle) else "euclid"
    lines = [f"# {comment}"] if comment else []
    lines += [
        f"geometry = {geometry}",
        f"center = {_point_value(problem.circle.center)}",
        f"radius = {format_rational(problem.circle.radius)}",
    ]
    lines += [f"{k} = {_point_value(getattr(problem, k))}" for k in ("P", "Q", "A", "C")]
    return "\n".join(lines) + "\n"
