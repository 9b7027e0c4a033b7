import math
import random

import pytest

from expcross.compare import compare_with_closed_form, default_x_max
from expcross.intersect import TANGENT_BASE


def test_two_point_base_matches():
    verdict = compare_with_closed_form(1.3)
    assert not verdict.count_mismatch
    assert len(verdict.matched_pairs) == 2
    assert verdict.max_delta <= 1e-8


def test_no_intersection_base_agrees_on_empty():
    verdict = compare_with_closed_form(2.0)
    assert verdict.oracle_roots == ()
    assert verdict.closed_form_roots == ()
    assert not verdict.count_mismatch
    assert verdict.max_delta == 0.0


def test_decreasing_base_matches():
    verdict = compare_with_closed_form(0.8)
    assert not verdict.count_mismatch
    assert len(verdict.matched_pairs) == 1
    assert verdict.max_delta <= 1e-8


def test_small_base_mismatch_is_reported_not_raised():
    verdict = compare_with_closed_form(0.05)
    assert verdict.count_mismatch
    assert len(verdict.oracle_roots) == 3
    assert len(verdict.closed_form_roots) == 1
    # the diagonal point is still matched tightly
    assert len(verdict.matched_pairs) == 1
    assert verdict.deltas[0] <= 1e-8


def test_default_x_max():
    assert default_x_max(()) == 50.0
    assert default_x_max((1.5, 20.0)) == 80.0
    assert default_x_max((0.8,)) == 50.0


def test_scan_window_heuristic_used():
    verdict = compare_with_closed_form(1.05)
    upper = max(verdict.closed_form_roots)
    assert verdict.x_max == max(50.0, 4.0 * upper)
    assert not verdict.count_mismatch


def test_regime_agreement_randomized():
    rng = random.Random(1729)
    for _ in range(50):
        b = rng.uniform(1.000001, TANGENT_BASE - 1e-6)
        verdict = compare_with_closed_form(b)
        assert not verdict.count_mismatch, b
    for _ in range(50):
        b = rng.uniform(1e-4, 1.0 - 1e-6)
        verdict = compare_with_closed_form(b)
        # extra off-diagonal roots are findings, not failures; the
        # diagonal point itself must always be matched
        assert len(verdict.matched_pairs) == 1, b
        assert verdict.deltas[0] <= 1e-8, b
    for _ in range(50):
        b = rng.uniform(TANGENT_BASE + 1e-6, 50.0)
        verdict = compare_with_closed_form(b)
        assert verdict.oracle_roots == () and verdict.closed_form_roots == (), b


def test_verdict_carries_inputs():
    verdict = compare_with_closed_form(1.3, x_max=25.0, n=5000)
    assert verdict.b == 1.3
    assert verdict.x_max == 25.0
    assert verdict.n == 5000
    assert math.isfinite(verdict.max_delta)
