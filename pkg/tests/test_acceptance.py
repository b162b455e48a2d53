"""Acceptance suite: one test per criterion, driven through selftest."""

import pytest

from szeta import selftest as st


def _assert_ok(result, max_runtime=None):
    assert result.passed, result.details.get("failures")
    if max_runtime is not None:
        assert result.runtime < max_runtime, (
            f"{result.name} took {result.runtime:.1f}s "
            f"(limit {max_runtime}s)")


def test_criterion_1_poisson_suite():
    _assert_ok(st.check_poisson_suite(), max_runtime=10.0)


def test_criterion_2_odd_suite():
    _assert_ok(st.check_odd_suite(), max_runtime=60.0)


def test_criterion_3_explicit_formula(zeros):
    _assert_ok(st.check_explicit_formula(zeros), max_runtime=60.0)


def test_criterion_4_theorem1_limits():
    _assert_ok(st.check_theorem1_limits())


def test_criterion_5_corollary_integral():
    _assert_ok(st.check_corollary_integral())


def test_criterion_6_asymptotic_displays():
    _assert_ok(st.check_appendix(), max_runtime=120.0)


def test_criterion_7_representation(zeros):
    _assert_ok(st.check_representation(zeros))


def test_criterion_8_interpolation():
    _assert_ok(st.check_interpolation())


def test_criterion_9_count_cross_route(zeros):
    _assert_ok(st.check_count_cross_route(zeros))
