from fractions import Fraction

import pytest
import sympy
from pydantic import ValidationError

from algebra.identities import (
    SUITES,
    VnMode,
    compare,
    ddim_classic_check,
    hurwitz_check,
    legendre_ode_check,
    legendre_poly,
    leibniz_coefficient,
    li_shanlan_check,
    min_orbit_numerator_check,
    run_suite,
    sample_weights,
    suite_tasks,
    vn_series,
    weight_checks,
)
from core.logging_system import ComputationError, ErrorCategory
from core.models import SuiteRanges, VerificationReport

SMALL = SuiteRanges(n_max=2, m_max=2, d_max=2, k_max=3, order=6, rank_max=4)


def test_li_shanlan_with_default_and_free_upper_limit():
    assert li_shanlan_check(4, 3).passed
    assert li_shanlan_check(3, 1, upper=5).passed
    assert li_shanlan_check(2, 5, upper=2).point == {"n": 2, "m": 5, "upper": 2}


def test_li_shanlan_upper_limit_bound():
    with pytest.raises(ComputationError) as excinfo:
        li_shanlan_check(4, 3, upper=2)
    assert excinfo.value.category == ErrorCategory.RANGE


@pytest.mark.parametrize("n", range(0, 9))
def test_legendre_polynomials_match_sympy(n):
    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.legendre(n, x), x).all_coeffs()[::-1]
    assert legendre_poly(n).coefficients == tuple(Fraction(int(c.p), int(c.q)) for c in expected)


@pytest.mark.parametrize("n", range(0, 12))
def test_legendre_ode_and_hurwitz(n):
    assert legendre_ode_check(n).passed
    assert hurwitz_check(n).passed


def test_leibniz_coefficients():
    assert [leibniz_coefficient(1, k) for k in range(2)] == [2, 1]
    assert [leibniz_coefficient(2, k) for k in range(3)] == [6, 6, 1]


@pytest.mark.parametrize("mode", list(VnMode))
@pytest.mark.parametrize("n", range(0, 6))
def test_every_vn_representation_agrees(mode, n):
    assert vn_series(n, 12, mode) == vn_series(n, 12, VnMode.BINOMSQ)


def test_vn_first_terms():
    assert vn_series(1, 3, "leibniz").coefficients == (1, 4, 9, 16)


def test_unknown_vn_mode():
    with pytest.raises(ComputationError) as excinfo:
        vn_series(1, 3, "taylor")
    assert excinfo.value.category == ErrorCategory.USAGE


def test_failures_carry_both_sides():
    report = compare("demo", {"n": 3}, (1, 2), (1, 3))
    assert report.status == "fail"
    assert report.left == "[1, 2]"
    assert report.right == "[1, 3]"
    assert compare("demo", {"n": 3}, Fraction(4, 2), 2).passed


def test_failed_report_without_witness_is_rejected():
    with pytest.raises(ValidationError):
        VerificationReport(identity="demo", point={"n": 1}, status="fail")


def test_sample_weights_are_nonzero_and_unique():
    samples = sample_weights(4)
    assert len(samples) == len(set(samples))
    assert all(any(labels) for labels in samples)
    assert (1, 0, 0, 1) in samples


def test_sample_weights_reach_rank_eight():
    samples = sample_weights(8)
    assert len(samples) == len(set(samples))
    for rank in (6, 7, 8):
        assert (1,) * rank in samples
        assert (1, 0, 0, 0, 0, 1) + (0,) * (rank - 6) in samples


@pytest.mark.parametrize("labels", [(0, 1, 0, 0, 0, 1, 0), (1, 0, 0, 0, 0, 0, 1, 1), (1,) * 8])
def test_weight_checks_pass_at_high_rank(labels):
    assert all(report.passed for report in weight_checks(labels, 2))


@pytest.mark.parametrize("suite", list(SUITES))
def test_suites_pass_on_small_grids(suite):
    reports = run_suite(suite, SMALL)
    assert reports
    assert [r for r in reports if not r.passed] == []


def test_suite_defaults_fill_unset_bounds():
    assert len(suite_tasks("li-shanlan", SuiteRanges(n_max=1))) == 2 * 41


def test_all_concatenates_every_suite():
    assert len(suite_tasks("all", SMALL)) == sum(len(suite_tasks(name, SMALL)) for name in SUITES)


def test_unknown_suite():
    with pytest.raises(ComputationError) as excinfo:
        suite_tasks("pythagoras")
    assert excinfo.value.category == ErrorCategory.USAGE


def test_parallel_run_keeps_report_order():
    ranges = SuiteRanges(n_max=3, m_max=3)
    assert run_suite("li-shanlan", ranges.model_copy(update={"workers": 2})) == run_suite("li-shanlan", ranges)


def _points(suite, check, ranges=None):
    return [args[0] for func, args in suite_tasks(suite, ranges) if func is check]


def test_default_grids_cover_minimal_orbit_to_ten_and_classic_rows_to_twelve():
    assert _points("narayana-numerators", min_orbit_numerator_check) == list(range(1, 11))
    assert _points("catalan-laws", ddim_classic_check) == list(range(0, 13))


def test_requested_n_max_bounds_secondary_grids():
    assert _points("narayana-numerators", min_orbit_numerator_check, SMALL) == [1, 2]
    assert _points("catalan-laws", ddim_classic_check, SMALL) == [0, 1, 2]
