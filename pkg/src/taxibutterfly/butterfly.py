"""Butterfly configurations: construction, verdict and symmetry hypotheses.

The configuration is the classic one. M is the midpoint of chord PQ, chords
AB and CD pass through M, and the wings AD and CB cut the line PQ at X and Y.
The conclusion holds when M is also the midpoint of XY.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .circles import (
    REFLECTIONS,
    Circle,
    EuclideanCircle,
    SymmetryKind,
    TaxicabCircle,
    chord_second_point,
    on_axis,
    on_circle,
    strictly_inside,
    symmetries_between,
    symmetry_image,
)
from .plane import (
    Point,
    UniquePoint,
    collinear,
    intersect_lines,
    line_through,
    midpoint,
    taxicab_distance,
)


@dataclass(frozen=True)
class ButterflyProblem:
    circle: Circle
    P: Point
    Q: Point
    A: Point
    C: Point

    @property
    def is_taxicab(self) -> bool:
        return isinstance(self.circle, TaxicabCircle)

    @property
    def M(self) -> Point:
        return midpoint(self.P, self.Q)

    def relabel(self, **points: Point) -> "ButterflyProblem":
        fields = dict(P=self.P, Q=self.Q, A=self.A, C=self.C)
        fields.update(points)
        return ButterflyProblem(self.circle, **fields)


@dataclass(frozen=True)
class ButterflyTrace:
    M: Point
    B: Point
    D: Point
    X: Point
    Y: Point
    midXY: Point
    deviation: Fraction
    holds: bool


class DegenerateKind(enum.Enum):
    WING_AD_PARALLEL_TO_PQ = "WingADParallelToPQ"
    WING_CB_PARALLEL_TO_PQ = "WingCBParallelToPQ"
    VALIDATION_FAILURE = "ValidationFailure"


@dataclass(frozen=True)
class DegenerateReason:
    kind: DegenerateKind
    detail: str = ""
    # chord completions are still available for a wing degeneracy
    M: Point | None = None
    B: Point | None = None
    D: Point | None = None

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.detail}" if self.detail else self.kind.value


TraceResult = Union[ButterflyTrace, DegenerateReason]


def validate_problem(problem: ButterflyProblem) -> list[str]:
    """Return every violated well-formedness condition (empty when valid)."""
    c = problem.circle
    P, Q, A, C = problem.P, problem.Q, problem.A, problem.C
    errors = []
    for name, p in (("P", P), ("Q", Q), ("A", A), ("C", C)):
        if not on_circle(c, p):
            errors.append(f"{name} = {p} is not on the circle")
    if P == Q:
        errors.append("P = Q")
    if A == C:
        errors.append("A = C")
    for a_name, a in (("A", A), ("C", C)):
        for p_name, p in (("P", P), ("Q", Q)):
            if a == p:
                errors.append(f"{a_name} = {p_name}")
    M = problem.M
    if not strictly_inside(c, M):
        errors.append(f"M = {M} is not strictly inside the circle")
    elif collinear(A, C, M):
        errors.append(f"A, C, M are collinear (M = {M}); chords AB and CD coincide")
    return errors


def trace_butterfly(problem: ButterflyProblem) -> TraceResult:
    errors = validate_problem(problem)
    if errors:
        return DegenerateReason(DegenerateKind.VALIDATION_FAILURE, "; ".join(errors))
    return construct(problem)


def construct(problem: ButterflyProblem) -> TraceResult:
    """Trace a problem already known to pass :func:`validate_problem`."""
    c = problem.circle
    P, Q, A, C = problem.P, problem.Q, problem.A, problem.C
    M = midpoint(P, Q)
    B = chord_second_point(c, A, M)
    D = chord_second_point(c, C, M)
    pq = line_through(P, Q)
    hit_x = intersect_lines(line_through(A, D), pq)
    if not isinstance(hit_x, UniquePoint):
        return DegenerateReason(DegenerateKind.WING_AD_PARALLEL_TO_PQ, M=M, B=B, D=D)
    hit_y = intersect_lines(line_through(C, B), pq)
    if not isinstance(hit_y, UniquePoint):
        return DegenerateReason(DegenerateKind.WING_CB_PARALLEL_TO_PQ, M=M, B=B, D=D)
    X, Y = hit_x.point, hit_y.point
    mid = midpoint(X, Y)
    deviation = taxicab_distance(M, mid)
    return ButterflyTrace(M, B, D, X, Y, mid, deviation, deviation == 0)


@dataclass(frozen=True)
class HypothesisReport:
    sym_AC: frozenset[SymmetryKind]
    sym_BD: frozenset[SymmetryKind]
    common_reflections: frozenset[SymmetryKind]
    m_is_center: bool
    alternate_axis_witnesses: frozenset[SymmetryKind]
    pq_stable: frozenset[SymmetryKind]

    @property
    def primary_satisfied(self) -> bool:
        return bool(self.common_reflections) or (
            SymmetryKind.CENTRAL in self.sym_AC and SymmetryKind.CENTRAL in self.sym_BD
        )

    @property
    def alternate_satisfied(self) -> bool:
        return self.m_is_center or bool(self.alternate_axis_witnesses)

    @property
    def fully_symmetric(self) -> bool:
        return self.m_is_center or bool(self.common_reflections & self.pq_stable)


class UnsupportedQuery(ValueError):
    pass


def hypothesis_report(problem: ButterflyProblem, trace: ButterflyTrace) -> HypothesisReport:
    c = problem.circle
    if not isinstance(c, TaxicabCircle):
        raise UnsupportedQuery("symmetry hypotheses are defined for taxicab circles only")
    if not isinstance(trace, ButterflyTrace):
        raise UnsupportedQuery(f"trace is degenerate: {trace}")
    sym_ac = symmetries_between(c, problem.A, problem.C)
    sym_bd = symmetries_between(c, trace.B, trace.D)
    common = frozenset(s for s in sym_ac & sym_bd if s.is_reflection)
    witnesses = frozenset(s for s in REFLECTIONS if s in sym_ac and on_axis(c, s, trace.M))
    pq = {problem.P, problem.Q}
    stable = frozenset(
        s for s in SymmetryKind
        if {symmetry_image(c, s, problem.P), symmetry_image(c, s, problem.Q)} == pq
    )
    return HypothesisReport(
        sym_AC=sym_ac,
        sym_BD=sym_bd,
        common_reflections=common,
        m_is_center=trace.M == c.center,
        alternate_axis_witnesses=witnesses,
        pq_stable=stable,
    )


class Outcome(enum.Enum):
    DEGENERATE = "Degenerate"
    HOLDS_FULL_SYMMETRY = "HoldsFullSymmetry"
    HOLDS_CENTER = "HoldsCenter"
    HOLDS_UNEXPLAINED = "HoldsUnexplained"
    FAILS_NO_HYPOTHESIS = "FailsNoHypothesis"
    PAPER_HYPOTHESIS_BUT_FAILS = "PaperHypothesisButFails"

    def __str__(self) -> str:
        return self.value


def classify_outcome(report: HypothesisReport | None, trace: TraceResult) -> Outcome:
    """Bucket a traced problem.

    ``report`` is None for Euclidean problems, where no taxicab hypothesis
    applies: those land in HoldsUnexplained or FailsNoHypothesis.
    """
    if not isinstance(trace, ButterflyTrace):
        return Outcome.DEGENERATE
    if trace.holds:
        if report is None:
            return Outcome.HOLDS_UNEXPLAINED
        if report.m_is_center:
            return Outcome.HOLDS_CENTER
        if report.fully_symmetric:
            return Outcome.HOLDS_FULL_SYMMETRY
        return Outcome.HOLDS_UNEXPLAINED
    if report is not None and (report.primary_satisfied or report.alternate_satisfied):
        return Outcome.PAPER_HYPOTHESIS_BUT_FAILS
    return Outcome.FAILS_NO_HYPOTHESIS


@dataclass(frozen=True)
class Analysis:
    problem: ButterflyProblem
    trace: TraceResult
    report: HypothesisReport | None
    outcome: Outcome


def analyze(problem: ButterflyProblem, trace: TraceResult | None = None) -> Analysis:
    """Trace, report on and classify one problem (reusing ``trace`` if given)."""
    if trace is None:
        trace = trace_butterfly(problem)
    report = None
    if isinstance(trace, ButterflyTrace) and problem.is_taxicab:
        report = hypothesis_report(problem, trace)
    return Analysis(problem, trace, report, classify_outcome(report, trace))


def taxicab_problem(radius, P, Q, A, C, center=(0, 0)) -> ButterflyProblem:
    """Shorthand: points given as coordinate pairs."""
    return ButterflyProblem(TaxicabCircle(Point(*center), radius), Point(*P), Point(*Q), Point(*A), Point(*C))


def euclid_problem(radius, P, Q, A, C, center=(0, 0)) -> ButterflyProblem:
    return ButterflyProblem(EuclideanCircle(Point(*center), radius), Point(*P), Point(*Q), Point(*A), Point(*C))
