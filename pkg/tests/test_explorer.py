from fractions import Fraction as F

import pytest

from taxibutterfly.butterfly import ButterflyTrace, Outcome, analyze, validate_problem
from taxibutterfly.circles import SymmetryKind as S
from taxibutterfly.circles import on_taxicab_circle, symmetry_image
from taxibutterfly.explorer import (
    GenerationError,
    SampleSpec,
    generate_problem,
    parse_mode,
    run_campaign,
    sample_rng,
    table1_corpus,
)
from taxibutterfly.plane import Point


def test_table1_corpus_rows():
    rows = table1_corpus()
    assert len(rows) == 5
    first, last = rows[0], rows[-1]
    assert (first.P, first.Q, first.A, first.C) == (Point(-8, 2), Point(3, 7), Point(-5, 5), Point(1, 9))
    assert last.P == Point(F(-35, 11), F(75, 11))
    assert last.Q == Point(F(81, 22), F(139, 22))
    assert (last.A, last.C) == (Point(-2, 8), Point(2, 8))
    for prob in rows:
        assert prob.circle.radius == 10 and prob.circle.center == Point(0, 0)
        assert validate_problem(prob) == []


def test_table1_row_notes_hold():
    rows = table1_corpus()
    analyses = [analyze(p) for p in rows]
    c = rows[0].circle
    # row 2: A, C mirror images across the vertical axis
    assert analyses[1].report.sym_AC == {S.REFLECT_VERTICAL}
    # row 3: P, Q mirror images across the vertical axis
    assert S.REFLECT_VERTICAL in analyses[2].report.pq_stable
    # row 4: A, C across the antidiagonal, P, Q across the vertical axis
    assert analyses[3].report.sym_AC == {S.REFLECT_ANTIDIAGONAL}
    assert analyses[3].report.pq_stable == {S.REFLECT_VERTICAL}
    # row 5: A, C across the vertical axis, B, D through the center
    assert analyses[4].report.sym_AC == {S.REFLECT_VERTICAL}
    assert analyses[4].report.sym_BD == {S.CENTRAL}
    assert all(on_taxicab_circle(c, p) for prob in rows for p in (prob.P, prob.Q, prob.A, prob.C))


def test_parse_mode():
    assert parse_mode("random") == ("random", None)
    assert parse_mode("axis_symmetric:vertical") == ("axis_symmetric", S.REFLECT_VERTICAL)
    assert parse_mode("paper_hypothesis_only_diagonal:antidiagonal") == (
        "paper_hypothesis_only_diagonal",
        S.REFLECT_ANTIDIAGONAL,
    )
    with pytest.raises(ValueError):
        parse_mode("spiral")
    with pytest.raises(ValueError):
        parse_mode("axis_symmetric:sideways")


def test_sample_spec_validation():
    with pytest.raises(ValueError):
        SampleSpec(geometry="euclid", mode="paper_hypothesis_only_diagonal")
    with pytest.raises(ValueError):
        SampleSpec(mode="paper_hypothesis_only_diagonal", axis=S.REFLECT_VERTICAL)
    with pytest.raises(ValueError):
        SampleSpec(axis=S.CENTRAL)
    with pytest.raises(ValueError):
        SampleSpec(count=0)
    with pytest.raises(ValueError):
        SampleSpec(seed=2**64)


def _draws(spec, n=60):
    return [generate_problem(spec, sample_rng(spec.seed, i)) for i in range(n)]


@pytest.mark.parametrize("axis", [S.REFLECT_VERTICAL, S.REFLECT_HORIZONTAL, S.REFLECT_DIAGONAL, S.REFLECT_ANTIDIAGONAL])
def test_axis_symmetric_postconditions(axis):
    for prob in _draws(SampleSpec(mode="axis_symmetric", axis=axis, seed=4)):
        a = analyze(prob)
        c = prob.circle
        assert symmetry_image(c, axis, prob.A) == prob.C
        assert {symmetry_image(c, axis, prob.P), symmetry_image(c, axis, prob.Q)} == {prob.P, prob.Q}
        assert a.report.fully_symmetric and not a.report.m_is_center


def test_center_postconditions():
    for prob in _draws(SampleSpec(mode="center", seed=4)):
        assert analyze(prob).report.m_is_center


@pytest.mark.parametrize("axis", [None, S.REFLECT_DIAGONAL, S.REFLECT_ANTIDIAGONAL])
def test_probe_postconditions(axis):
    for prob in _draws(SampleSpec(mode="paper_hypothesis_only_diagonal", axis=axis, seed=4)):
        r = analyze(prob).report
        assert r.alternate_satisfied and not r.fully_symmetric


def test_random_postconditions():
    for geometry in ("taxicab", "euclid"):
        for prob in _draws(SampleSpec(geometry=geometry, seed=8)):
            assert validate_problem(prob) == []


def test_generator_is_seed_deterministic():
    spec = SampleSpec(mode="axis_symmetric", seed=31)
    assert _draws(spec, 20) == _draws(spec, 20)
    assert _draws(spec, 20) != _draws(SampleSpec(mode="axis_symmetric", seed=32), 20)


def test_retry_cap():
    with pytest.raises(GenerationError):
        generate_problem(SampleSpec(), sample_rng(0, 0), retry_cap=0)


def test_campaign_counts_and_reproducibility():
    spec = SampleSpec(mode="random", count=300, seed=77, exemplar_limit=3)
    stats = run_campaign(spec)
    assert stats.total == 300 and not stats.failures
    assert stats.seed == 77
    assert stats.counts[Outcome.FAILS_NO_HYPOTHESIS] > stats.total // 2
    assert all(len(v) <= 3 for v in stats.exemplars.values())
    again = run_campaign(spec)
    assert again.counts == stats.counts and again.exemplars == stats.exemplars


def test_campaign_parallel_matches_serial():
    spec = SampleSpec(mode="paper_hypothesis_only_diagonal", count=60, seed=5)
    serial = run_campaign(spec)
    parallel = run_campaign(spec, workers=3)
    assert serial.counts == parallel.counts
    assert serial.exemplars == parallel.exemplars


def test_exemplars_are_first_by_index():
    stats = run_campaign(SampleSpec(mode="random", count=120, seed=2, exemplar_limit=4))
    for outcome, kept in stats.exemplars.items():
        indices = [i for i, _ in kept]
        assert indices == sorted(indices)
        for i, prob in kept:
            assert analyze(prob).outcome is outcome


def test_campaign_invariants_small():
    for spec in (
        SampleSpec(mode="axis_symmetric", count=200, seed=1),
        SampleSpec(mode="center", count=200, seed=1),
        SampleSpec(geometry="euclid", mode="random", count=200, seed=1),
    ):
        stats = run_campaign(spec)
        assert stats.counts[Outcome.FAILS_NO_HYPOTHESIS] == 0
        assert stats.counts[Outcome.PAPER_HYPOTHESIS_BUT_FAILS] == 0
    axis = run_campaign(SampleSpec(mode="axis_symmetric", count=200, seed=9))
    assert axis.counts[Outcome.HOLDS_FULL_SYMMETRY] == 200


def test_euclid_axis_and_center_modes():
    for mode in ("axis_symmetric", "center"):
        for prob in _draws(SampleSpec(geometry="euclid", mode=mode, seed=3), 40):
            t = analyze(prob).trace
            assert isinstance(t, ButterflyTrace) and t.holds
