"""Tests for the threshold cubic, evaluators, and the program maximizers."""

import pytest

from fsts import (
    ProgramPoint,
    eta,
    maximize_p3,
    maximize_p4,
    maximize_p5,
    optimal_point_p3,
    poly_p,
    root_xstar,
    verify_chain,
    w3_eval,
    w4_eval,
    w5_at_one,
    w5_eval,
)
from fsts.errors import InfeasiblePointError, InputError

XSTAR = 0.1421657737


class TestPoly:
    def test_reference_values(self):
        assert poly_p(0) == -1
        assert abs(poly_p(1 / 6) - 5 / 54) < 1e-15
        assert poly_p(0.5) == -0.5

    def test_denominator_factorization(self):
        for i in range(1000):
            d = i / 1000 * (1 / 6)
            lhs = ((8 * d - 14) * d + 7) * d - 1
            rhs = (d - 1) * (2 * d - 1) * (4 * d - 1)
            assert abs(lhs - rhs) <= 1e-15


class TestRoot:
    def test_value(self):
        report = root_xstar(1e-10)
        assert abs(report.xstar - XSTAR) <= 1e-9
        assert 0.8578 < report.threshold < 0.8579

    def test_sign_change_across_bracket(self):
        report = root_xstar(1e-8)
        assert poly_p(report.bracket_low) < 0 < poly_p(report.bracket_high)
        assert report.bracket_width <= 1e-8

    def test_bad_tolerance(self):
        with pytest.raises(InputError, match="positive"):
            root_xstar(0)


class TestClosedForms:
    def test_w5_at_one_reference_points(self):
        assert w5_at_one(0) == 0
        assert abs(w5_at_one(0.1) - 55 / 108) < 1e-15
        assert abs(w5_at_one(0.15) - 1.134453781512605) < 1e-12

    def test_w5_at_one_equals_eval(self):
        for i in range(1000):
            d = i / 1000 * (1 / 6 - 1e-9)
            assert abs(w5_at_one(d) - w5_eval(d, 1.0)) <= 1e-12

    def test_value_one_exactly_at_root(self):
        x = root_xstar(1e-12).xstar
        assert abs(w5_at_one(x) - 1) <= 1e-8

    def test_sign_matches_cubic(self):
        for d in (0.0, 0.05, 0.1, 0.13, 0.1421657737, 0.15, 0.16):
            diff = w5_at_one(d) - 1
            p = poly_p(d)
            if abs(p) > 1e-9:
                assert (diff > 0) == (p > 0)

    def test_w5_at_zero_defect(self):
        # reduces to (f-1)/f^3, non-positive with max 0 at f = 1
        for f in (1.0,):
            assert w5_eval(0.0, f) == 0.0

    def test_eta_lower_end_identity(self):
        for i in range(1000):
            d = i / 1000 * (1 / 6 - 1e-9)
            lhs = eta(d, 1 - d)
            rhs = (1 - d) * (1 - 3 * d) * (1 - 6 * d)
            assert abs(lhs - rhs) <= 1e-14

    def test_eta_nonnegative_below_root(self):
        for d in (0.0, 0.05, 0.1, XSTAR):
            for i in range(2000):
                f = (1 - d) + i / 1999 * d if d else 1.0
                assert eta(d, f) >= -1e-15


class TestW4:
    def test_zero_at_origin(self):
        assert w4_eval(0.0, 1.0, 1.0) == 0.0

    def test_matches_w5_at_e0_one(self):
        for d in (0.02, 0.08, 0.13):
            for j in range(11):
                f = (1 - d) + j / 10 * d
                assert abs(w4_eval(d, 1.0, f) - w5_eval(d, f)) <= 1e-14

    def test_independent_transcription(self):
        # regroup the formula from scratch and compare
        d, e0, f = 0.1, 0.95, 0.97
        inv = lambda x: 1.0 / x
        first = (inv(1 - d) - inv(e0)) / (e0 - 2 * d)
        second = (inv(1 - d) - inv(f)) / (f - 2 * d)
        expected = e0 ** 2 * (
            first + (e0 - 2 * d) / (e0 + f - 1 - 4 * d) * (second + first)
        )
        assert abs(w4_eval(d, e0, f) - expected) <= 1e-14

    def test_domain_checks(self):
        with pytest.raises(InputError):
            w4_eval(0.2, 1.0, 1.0)
        with pytest.raises(InputError):
            w4_eval(0.1, 0.85, 1.0)


class TestW3:
    def test_zero_when_all_densities_one(self):
        pt = ProgramPoint(d=0.0, e0=1, e=1, f=1, q0=1, q=1, p=1, r0=1, r=1)
        assert w3_eval(pt) == 0.0

    def test_infeasible_point_lists_violation(self):
        pt = ProgramPoint(d=0.1, e0=1, e=0.9, f=1, q0=0.5, q=0.9, p=0.4, r0=1, r=0.5)
        with pytest.raises(InfeasiblePointError, match="q0"):
            w3_eval(pt)

    def test_assembled_point_matches_w5(self):
        for d in (0.0, 0.04, 0.08, 0.12, XSTAR):
            for j in range(21):
                f = (1 - d) + (j / 20) * d if d else 1.0
                pt = optimal_point_p3(d, f)
                assert pt.is_feasible(tol=1e-12)
                assert abs(w3_eval(pt) - w5_eval(d, f)) <= 1e-12

    def test_assembled_point_at_root(self):
        x = root_xstar(1e-12).xstar
        assert abs(w3_eval(optimal_point_p3(x, 1.0)) - 1.0) <= 1e-10


class TestMaximizeP5:
    def test_degenerate_at_zero(self):
        result = maximize_p5(0.0)
        assert result.value == 0.0
        assert result.point["f"] == 1.0

    def test_boundary_maximum_at_root(self):
        x = root_xstar(1e-12).xstar
        result = maximize_p5(x)
        assert abs(result.value - 1.0) <= 1e-8
        assert abs(result.point["f"] - 1.0) <= 1e-3

    def test_interior_maximum_above_root(self):
        result = maximize_p5(0.15)
        assert result.value >= 1.1344
        assert result.point["f"] < 1.0  # the top sits strictly inside

    def test_below_root_stays_below_one(self):
        for d in (0.05, 0.1, 0.14):
            assert maximize_p5(d).value < 1.0


class TestMaximizeP4:
    def test_zero_defect(self):
        result = maximize_p4(0.0)
        assert result.value == 0.0

    def test_agrees_with_p5(self):
        for d in (0.05, 0.1, XSTAR):
            assert abs(maximize_p4(d).value - maximize_p5(d).value) <= 1e-6


class TestMaximizeP3:
    def test_reference_defect_stays_below_one(self):
        assert maximize_p3(0.1421).value <= 1 + 1e-6

    def test_agrees_with_p5(self):
        for d in (0.0, 0.1):
            assert abs(maximize_p3(d).value - maximize_p5(d).value) <= 1e-4

    def test_returned_point_feasible(self):
        result = maximize_p3(0.1, seed=3)
        pt = ProgramPoint(**result.point)
        assert pt.is_feasible(tol=1e-12)

    def test_deterministic(self):
        a = maximize_p3(0.08, seed=11, starts=40)
        b = maximize_p3(0.08, seed=11, starts=40)
        assert a.value == b.value and a.point == b.point

    def test_threads_do_not_change_result(self):
        a = maximize_p3(0.08, seed=11, starts=40)
        b = maximize_p3(0.08, seed=11, starts=40, threads=4)
        assert a.value == b.value and a.point == b.point

    def test_domain(self):
        with pytest.raises(InputError):
            maximize_p3(1 / 6)


class TestVerifyChain:
    def test_zero_defect(self):
        report = verify_chain(0.0, tol=1e-6)
        assert report.p3_value == report.p4_value == report.p5_value == 0.0
        assert report.ok

    def test_mid_defect(self):
        report = verify_chain(0.05, tol=1e-4)
        assert report.ok
        assert report.p4_vs_p5 <= 1e-6

    def test_bad_tol(self):
        with pytest.raises(InputError, match="positive"):
            verify_chain(0.05, tol=0)


class TestMonotonicityGrids:
    def test_w5_nondecreasing_in_f(self):
        for d in (0.0, 0.05, 0.1, XSTAR):
            lo = 1 - d
            prev = None
            for i in range(1001):
                f = lo + (1 - lo) * i / 1000 if d else 1.0
                value = w5_eval(d, f)
                if prev is not None:
                    assert value - prev >= -1e-12
                prev = value

    def test_w4_nondecreasing_in_e0(self):
        for d in (0.05, XSTAR):
            for j in range(5):
                f = (1 - d) + j / 4 * d
                prev = None
                for i in range(1001):
                    e0 = (1 - d) + d * i / 1000
                    value = w4_eval(d, e0, f)
                    if prev is not None:
                        assert value - prev >= -1e-12
                    prev = value
