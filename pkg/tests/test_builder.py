"""Window folding, witness scanning, budget ledger, certificate verification."""
from __future__ import annotations

import cmath
import random

import pytest

from simapprox import (
    Direction,
    DirectionSet,
    MagnitudeIndexError,
    ScanExhausted,
    SeriesFunction,
    TargetLibrary,
    Window,
    ZERO,
    arithmetic,
    build,
    check_budgets,
    degree,
    evaluate,
    evaluate_series,
    explicit,
    fix_window,
    magnitude_at,
    naturals,
    poly,
    power_law,
    scan_witness,
    spiral,
    total_polynomial,
    verify_certificate,
)

DIRS3 = DirectionSet((Direction(0.0), Direction(0.25), Direction(0.5)))
DIRS2 = DirectionSet((Direction(0.0), Direction(0.5)))
DESK_TARGETS = TargetLibrary((poly([1.0]), poly([0.0, 1.0]), poly([0.0, 0.0, 0.25])))


def test_magnitude_oracles():
    assert magnitude_at(naturals(), 7) == 7
    assert magnitude_at(arithmetic(1.0, 2.0), 3) == 7
    assert magnitude_at(power_law(2.0), 3) == 9
    assert cmath.isclose(magnitude_at(spiral(), 1), cmath.exp(1j), rel_tol=1e-15)
    assert magnitude_at(explicit([1.0, 2.5]), 2) == 2.5


def test_magnitude_explicit_out_of_range():
    with pytest.raises(MagnitudeIndexError):
        magnitude_at(explicit([1.0, 2.5]), 3)
    with pytest.raises(ValueError):
        magnitude_at(naturals(), 0)  # indices are 1-based


def test_scan_witness_oracles():
    assert scan_witness(naturals(), 6.0, 1, 100) == 7
    assert scan_witness(power_law(2.0), 6.0, 1, 100) == 3
    with pytest.raises(ScanExhausted):
        scan_witness(explicit([1.0, 2.0, 3.0]), 5.0, 1, 100)


def test_scan_witness_respects_start_and_cap():
    assert scan_witness(naturals(), 0.5, 4, 100) == 4
    with pytest.raises(ScanExhausted):
        scan_witness(naturals(), 50.0, 1, 10)


def test_window_validation():
    with pytest.raises(ValueError):
        Window(0, 2, 1, 2)
    with pytest.raises(ValueError):
        Window(1, 2, 1, 1)  # at least two directions per window


def test_zero_target_window_emits_zero_increment():
    series = SeriesFunction.zero()
    fix_window(series, Window(1, 2, 1, 2), naturals(), TargetLibrary((ZERO,)), DIRS2)
    c = series.certificates[0]
    assert series.increments[0] == ZERO
    assert c.created_bound == 0.0
    assert c.witness_s == 3  # first natural above threshold 2
    assert series.protect_radius == 4.0  # |m| + v


def test_one_window_build_frozen_oracle():
    series = SeriesFunction.zero()
    fix_window(series, Window(1, 2, 1, 2), naturals(), DESK_TARGETS, DIRS3)
    c = series.certificates[0]
    assert c.witness_s == 9
    assert c.m_value == 9 + 0j
    assert c.created_bound == pytest.approx(0.043885643309450745, abs=1e-12)
    assert c.slack == pytest.approx(0.25 - c.created_bound, abs=1e-15)
    assert degree(series.increments[0]) == 11
    assert series.protect_radius == 10.0
    assert series.tail_caps == [0.5]
    ok, measured = verify_certificate(series, c, DIRS3, DESK_TARGETS, grid=101)
    assert ok
    assert measured == pytest.approx(0.043880712981956276, abs=1e-12)
    assert check_budgets(series) == []


def test_threshold_escalation_recovers_bad_witnesses():
    # at |m|=3 and |m|=5 the jets are numerically unrecoverable; the
    # builder doubles its scan threshold until interpolation conditions
    series = SeriesFunction.zero()
    fix_window(series, Window(1, 4, 1, 2), naturals(), DESK_TARGETS, DIRS2)
    c = series.certificates[0]
    assert c.witness_s == 9
    assert c.created_bound < 1.0 / 8.0


def test_two_window_ledger_frozen_oracle():
    targets = TargetLibrary((ZERO, poly([1.0])))
    sched = [Window(1, 2, 1, 2), Window(1, 2, 2, 2)]
    series = build(sched, naturals(), targets, DIRS2)
    c0, c1 = series.certificates

    assert [degree(q) for q in series.increments] == [-1, 11]
    assert (c0.witness_s, c1.witness_s) == (3, 33)
    assert series.protect_history == [4.0, 34.0]
    assert series.tail_caps == [0.5, 0.125]

    # window 2's base-disc disturbance is charged against window 1's slack
    assert c0.slack_history[0] == 0.25
    assert c0.slack_history[1] == pytest.approx(0.24777720678464357, abs=1e-12)
    assert c1.slack_history == [pytest.approx(0.22365322531281234, abs=1e-12)]
    assert c1.created_bound == pytest.approx(0.026346774687187647, abs=1e-12)

    for c in series.certificates:
        ok, measured = verify_certificate(series, c, DIRS2, targets, grid=101)
        assert ok
        assert measured < 1.0 / c.window.N
    assert check_budgets(series) == []


def test_budget_checker_flags_tampering():
    targets = TargetLibrary((ZERO, poly([1.0])))
    series = build([Window(1, 2, 1, 2), Window(1, 2, 2, 2)], naturals(), targets, DIRS2)
    series.certificates[0].slack_history[1] += 0.1
    assert check_budgets(series)


def test_series_evaluation_matches_total_polynomial():
    targets = TargetLibrary((ZERO, poly([1.0])))
    series = build([Window(1, 2, 1, 2), Window(1, 2, 2, 2)], naturals(), targets, DIRS2)
    total = total_polynomial(series)
    rng = random.Random(11)
    for _ in range(50):
        z = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        a, b = evaluate_series(series, z), evaluate(total, z)
        assert cmath.isclose(a, b, rel_tol=1e-10, abs_tol=1e-10)


def test_verify_certificate_catches_broken_series():
    series = SeriesFunction.zero()
    fix_window(series, Window(1, 2, 1, 2), naturals(), DESK_TARGETS, DIRS3)
    series.increments[0] = poly([9.0])  # constant 9 vs target p_1 = 1
    ok, measured = verify_certificate(
        series, series.certificates[0], DIRS3, DESK_TARGETS, grid=21
    )
    assert not ok
    assert measured >= 0.5
