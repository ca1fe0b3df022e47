"""Exact butterfly-theorem experiments on taxicab and Euclidean circles."""

from .butterfly import (
    ButterflyProblem,
    ButterflyTrace,
    DegenerateReason,
    HypothesisReport,
    Outcome,
    analyze,
    classify_outcome,
    euclid_problem,
    hypothesis_report,
    taxicab_problem,
    trace_butterfly,
    validate_problem,
)
from .circles import EuclideanCircle, SymmetryKind, TaxicabCircle
from .plane import LineEq, Point

__version__ = "0.1.0"
