"""Seeded problem generators and classification campaigns.

Sample ``i`` of a campaign draws from its own ``random.Random`` seeded with
the string ``"<seed>:<i>"`` (hashed with SHA-512 by the stdlib), so results
do not depend on evaluation order or on how samples are spread across
worker processes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .butterfly import (
    ButterflyProblem,
    ButterflyTrace,
    Outcome,
    analyze,
    construct,
    taxicab_problem,
    validate_problem,
)
from .circles import (
    REFLECTIONS,
    ChordFamily,
    Circle,
    EuclideanCircle,
    SymmetryKind,
    TaxicabCircle,
    boundary_point,
    chords_with_midpoint,
    symmetry_image,
)
from .plane import Point

MODES = ("random", "axis_symmetric", "center", "paper_hypothesis_only_diagonal")
GEOMETRIES = ("taxicab", "euclid")
DEFAULT_RETRY_CAP = 10_000

_AXIS_NAMES = {
    "vertical": SymmetryKind.REFLECT_VERTICAL,
    "horizontal": SymmetryKind.REFLECT_HORIZONTAL,
    "diagonal": SymmetryKind.REFLECT_DIAGONAL,
    "antidiagonal": SymmetryKind.REFLECT_ANTIDIAGONAL,
}
_DIAGONALS = (SymmetryKind.REFLECT_DIAGONAL, SymmetryKind.REFLECT_ANTIDIAGONAL)


class GenerationError(RuntimeError):
    """The rejection loop hit its retry cap."""


def table1_corpus() -> list[ButterflyProblem]:
    """The five failing configurations, radius 10 about the origin, in table order."""
    rows = [
        ((-8, 2), (3, 7), (-5, 5), (1, 9)),
        ((-8, 2), (3, 7), (-2, 8), (2, 8)),
        ((-5, 5), (5, 5), (-3, 7), (2, 8)),
        ((-9, 1), (9, 1), (-6, 4), (-4, 6)),
        (("-35/11", "75/11"), ("81/22", "139/22"), (-2, 8), (2, 8)),
    ]
    return [taxicab_problem(10, *row) for row in rows]


TABLE1_NOTES = (
    "A and C on the same segment of the circle",
    "A and C symmetric about an axis of symmetry for the circle",
    "P and Q symmetric about an axis of symmetry for the circle",
    "A, C and P, Q symmetric about different axes of symmetry",
    "A, C and B, D symmetric about different axes of symmetry",
)


@dataclass(frozen=True)
class SampleSpec:
    geometry: str = "taxicab"
    mode: str = "random"
    count: int = 1000
    seed: int = 0
    max_denominator: int = 12
    # reflection used by the axis modes; None lets each sample pick one
    axis: SymmetryKind | None = None
    radius: Fraction = Fraction(10)
    exemplar_limit: int = 10

    def __post_init__(self):
        if self.geometry not in GEOMETRIES:
            raise ValueError(f"unknown geometry {self.geometry!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.count <= 0 or self.max_denominator <= 0:
            raise ValueError("count and max_denominator must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.axis is not None and not self.axis.is_reflection:
            raise ValueError("axis must be a reflection")
        if self.mode == "paper_hypothesis_only_diagonal":
            if self.geometry != "taxicab":
                raise ValueError("paper_hypothesis_only_diagonal needs taxicab geometry")
            if self.axis is not None and self.axis not in _DIAGONALS:
                raise ValueError("paper_hypothesis_only_diagonal needs a diagonal axis")

    def circle(self) -> Circle:
        cls = TaxicabCircle if self.geometry == "taxicab" else EuclideanCircle
        return cls(Point(0, 0), self.radius)

    @property
    def mode_label(self) -> str:
        if self.axis is None:
            return self.mode
        name = next(k for k, v in _AXIS_NAMES.items() if v is self.axis)
        return f"{self.mode}:{name}"


def parse_mode(text: str) -> tuple[str, SymmetryKind | None]:
    """``"axis_symmetric:vertical"`` -> ("axis_symmetric", ReflectVertical)."""
    mode, _, axis = text.partition(":")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r} (expected one of {', '.join(MODES)})")
    if not axis:
        return mode, None
    if axis not in _AXIS_NAMES:
        raise ValueError(f"unknown axis {axis!r} (expected one of {', '.join(_AXIS_NAMES)})")
    return mode, _AXIS_NAMES[axis]


def sample_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


# -- sampling primitives -----------------------------------------------------


def _ratio(rng: random.Random, max_den: int, lo_num: int, hi_num: int) -> Fraction:
    """k/n with 1 <= n <= max_den and lo_num*n <= k < hi_num*n."""
    n = rng.randint(1, max_den)
    return Fraction(rng.randrange(lo_num * n, hi_num * n), n)


def _open_unit(rng: random.Random, max_den: int) -> Fraction:
    """Fraction strictly between 0 and 1."""
    n = rng.randint(2, max(2, max_den))
    return Fraction(rng.randint(1, n - 1), n)


def sample_boundary(rng: random.Random, c: Circle, max_den: int) -> Point:
    if isinstance(c, TaxicabCircle):
        return boundary_point(c, _ratio(rng, max_den, 0, 4))
    return boundary_point(c, _ratio(rng, max_den, -4, 5))


def _sample_axis_point(rng: random.Random, c: Circle, s: SymmetryKind, max_den: int) -> Point:
    """Interior point on the axis of ``s``, never the center."""
    r = c.radius
    k = _open_unit(rng, max_den) * rng.choice((-1, 1))
    if s is SymmetryKind.REFLECT_VERTICAL:
        off = Point(0, k * r)
    elif s is SymmetryKind.REFLECT_HORIZONTAL:
        off = Point(k * r, 0)
    elif s is SymmetryKind.REFLECT_DIAGONAL:
        off = Point(k * r / 2, k * r / 2)
    else:
        off = Point(k * r / 2, -k * r / 2)
    return c.center + off


def _symmetric_chords(c: TaxicabCircle, s: SymmetryKind, fam: ChordFamily):
    """Chords of ``fam`` that ``s`` maps onto themselves."""
    for p, q in fam.explicit:
        if {symmetry_image(c, s, p), symmetry_image(c, s, q)} == {p, q}:
            yield p, q
    for line in fam.families:
        # s(p(t)) - q(t) is affine in t; find its zero
        f0 = symmetry_image(c, s, line.chord(Fraction(0))[0]) - line.chord(Fraction(0))[1]
        f1 = symmetry_image(c, s, line.chord(Fraction(1))[0]) - line.chord(Fraction(1))[1]
        slope = f1 - f0
        if slope.x != 0:
            t = -f0.x / slope.x
        elif slope.y != 0:
            t = -f0.y / slope.y
        else:
            continue
        if line.lo < t < line.hi:
            p, q = line.chord(t)
            if symmetry_image(c, s, p) == q:
                yield p, q


def _sample_symmetric_pair(rng, c, s, max_den) -> tuple[Point, Point]:
    while True:
        a = sample_boundary(rng, c, max_den)
        image = symmetry_image(c, s, a) if isinstance(c, TaxicabCircle) else _euclid_image(c, s, a)
        if image != a:
            return a, image


def _euclid_image(c: EuclideanCircle, s: SymmetryKind, p: Point) -> Point:
    # the taxicab symmetry formulas only use the center, and the Euclidean
    # circle shares all five symmetries
    return symmetry_image(TaxicabCircle(c.center, c.radius), s, p)


def generate_problem(
    spec: SampleSpec, rng: random.Random, retry_cap: int = DEFAULT_RETRY_CAP
) -> ButterflyProblem:
    return _generate(spec, rng, retry_cap)[0]


def _generate(spec: SampleSpec, rng: random.Random, retry_cap: int = DEFAULT_RETRY_CAP):
    c = spec.circle()
    D = spec.max_denominator
    for _ in range(retry_cap):
        problem = _draw(spec, c, rng, D)
        if problem is None or validate_problem(problem):
            continue
        trace = construct(problem)
        # only the random mode keeps wing degeneracies; targeted modes need a verdict
        if spec.mode == "random" or isinstance(trace, ButterflyTrace):
            return problem, trace
    raise GenerationError(f"no acceptable {spec.mode_label} problem after {retry_cap} draws")


def _draw(spec: SampleSpec, c: Circle, rng: random.Random, D: int) -> ButterflyProblem | None:
    mode = spec.mode
    if mode == "random":
        P, Q, A, C = (sample_boundary(rng, c, D) for _ in range(4))
        return ButterflyProblem(c, P, Q, A, C)

    if mode == "center":
        P = sample_boundary(rng, c, D)
        Q = c.center.scale(2) - P
        A = sample_boundary(rng, c, D)
        C = sample_boundary(rng, c, D)
        return ButterflyProblem(c, P, Q, A, C)

    if mode == "axis_symmetric":
        s = spec.axis or rng.choice(REFLECTIONS)
        A, C = _sample_symmetric_pair(rng, c, s, D)
        if isinstance(c, EuclideanCircle):
            P, Q = _sample_symmetric_pair(rng, c, s, D)
            return ButterflyProblem(c, P, Q, A, C)
        M = _sample_axis_point(rng, c, s, D)
        chords = list(_symmetric_chords(c, s, chords_with_midpoint(c, M)))
        if len(chords) != 1:
            return None
        P, Q = chords[0]
        return ButterflyProblem(c, P, Q, A, C)

    # paper_hypothesis_only_diagonal
    s = spec.axis or rng.choice(_DIAGONALS)
    M = _sample_axis_point(rng, c, s, D)
    fam = chords_with_midpoint(c, M)
    if not fam.families:
        return None
    line = fam.families[0]
    t = line.lo + (line.hi - line.lo) * _open_unit(rng, D)
    P, Q = line.chord(t)
    if {symmetry_image(c, s, P), symmetry_image(c, s, Q)} == {P, Q}:
        return None
    A, C = _sample_symmetric_pair(rng, c, s, D)
    return ButterflyProblem(c, P, Q, A, C)


# -- campaigns ---------------------------------------------------------------


@dataclass
class CampaignStats:
    spec: SampleSpec
    counts: dict[Outcome, int] = field(default_factory=lambda: {o: 0 for o in Outcome})
    exemplars: dict[Outcome, list[tuple[int, ButterflyProblem]]] = field(
        default_factory=lambda: {o: [] for o in Outcome}
    )
    # sample indices whose generator hit the retry cap
    failures: list[int] = field(default_factory=list)

    @property
    def seed(self) -> int:
        return self.spec.seed

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def record(self, index: int, outcome: Outcome, problem: ButterflyProblem) -> None:
        self.counts[outcome] += 1
        kept = self.exemplars[outcome]
        if len(kept) < self.spec.exemplar_limit:
            kept.append((index, problem))


def evaluate_sample(spec: SampleSpec, index: int) -> tuple[int, Outcome | None, ButterflyProblem | None]:
    rng = sample_rng(spec.seed, index)
    try:
        problem, trace = _generate(spec, rng)
    except GenerationError:
        return index, None, None
    return index, analyze(problem, trace).outcome, problem


def _evaluate_chunk(spec: SampleSpec, indices: range):
    return [evaluate_sample(spec, i) for i in indices]


def run_campaign(spec: SampleSpec, workers: int = 1) -> CampaignStats:
    """Generate, trace and classify ``spec.count`` problems.

    ``workers > 1`` spreads samples over processes; the result is identical
    to a serial run.
    """
    if workers <= 1:
        results = _evaluate_chunk(spec, range(spec.count))
    else:
        step = -(-spec.count // (workers * 4))
        chunks = [range(i, min(i + step, spec.count)) for i in range(0, spec.count, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for chunk in pool.map(_evaluate_chunk, [spec] * len(chunks), chunks) for r in chunk]
    stats = CampaignStats(spec)
    for index, outcome, problem in sorted(results, key=lambda r: r[0]):
        if outcome is None:
            stats.failures.append(index)
        else:
            stats.record(index, outcome, problem)
    return stats
