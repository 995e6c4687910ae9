import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy import special, stats as sps

from stylochron.errors import DegenerateInput, InsufficientData, ShapeError
from stylochron.stats import (
    GroupSummary,
    betainc,
    correlate,
    group_summary,
    pearson,
    pearson_pvalue,
    sigma_difference,
    student_t_cdf,
    student_t_two_tailed,
    welch_ttest,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


def test_pearson_examples():
    assert pearson([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0, abs=1e-15)
    assert pearson([1, 2, 3], [6, 4, 2]) == pytest.approx(-1.0, abs=1e-15)
    assert pearson([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(0.8, abs=1e-15)


def test_pearson_errors():
    with pytest.raises(ShapeError):
        pearson([1, 2, 3], [1, 2])
    with pytest.raises(InsufficientData):
        pearson([1], [2])
    with pytest.raises(DegenerateInput):
        pearson([1, 1, 1], [1, 2, 3])


def test_pvalue_examples():
    assert pearson_pvalue(0.0, 10) == 1.0
    assert 3e-7 <= pearson_pvalue(0.71, 38) <= 9e-7
    assert 3e-4 <= pearson_pvalue(-0.53, 38) <= 9e-4
    assert pearson_pvalue(1.0, 5) == 0.0
    with pytest.raises(InsufficientData):
        pearson_pvalue(0.5, 2)


def test_pvalue_frozen_oracle():
    # frozen from mpmath betainc at 30 digits
    assert pearson_pvalue(0.71, 38) == pytest.approx(5.97010782958e-07, rel=1e-9)
    assert pearson_pvalue(-0.53, 38) == pytest.approx(6.20989966165e-04, rel=1e-9)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 50), st.floats(0.05, 50), st.floats(0, 1))
def test_betainc_matches_mpmath(a, b, x):
    ref = float(mpmath.betainc(a, b, 0, x, regularized=True))
    assert betainc(a, b, x) == pytest.approx(ref, rel=1e-9, abs=1e-13)


@settings(max_examples=100, deadline=None)
@given(st.floats(-30, 30), st.floats(1, 200))
def test_student_t_matches_scipy(t, df):
    assert student_t_two_tailed(t, df) == pytest.approx(2 * sps.t.sf(abs(t), df), rel=1e-9, abs=1e-14)
    assert student_t_cdf(t, df) == pytest.approx(sps.t.cdf(t, df), rel=1e-9, abs=1e-14)


@pytest.mark.parametrize("df", [1, 2, 3.5, 10, 37, 1000])
def test_t_cdf_at_zero_is_half(df):
    assert student_t_cdf(0.0, df) == pytest.approx(0.5, abs=1e-15)
    assert student_t_two_tailed(0.0, df) == pytest.approx(1.0, abs=1e-15)


def test_betainc_edges():
    assert betainc(2, 3, 0.0) == 0.0
    assert betainc(2, 3, 1.0) == 1.0
    assert betainc(2.5, 1.5, 0.3) == pytest.approx(special.betainc(2.5, 1.5, 0.3), rel=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(finite, finite), min_size=3, max_size=40))
def test_pearson_bounded_symmetric(pairs):
    xs, ys = zip(*pairs)
    try:
        r = pearson(xs, ys)
    except DegenerateInput:
        return
    assert -1.0 <= r <= 1.0
    assert r == pytest.approx(pearson(ys, xs), abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.floats(-100, 100), min_size=3, max_size=30),
    st.floats(0.01, 100),
    st.floats(-100, 100),
)
def test_pearson_affine_invariant(xs, scale, shift):
    ys = [x * x for x in xs]
    assume(np.std(xs) > 1e-3 and np.std(ys) > 1e-3)
    try:
        r = pearson(xs, ys)
    except DegenerateInput:
        return
    assert pearson([scale * x + shift for x in xs], ys) == pytest.approx(r, abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(st.floats(-0.999, 0.999), st.integers(3, 500))
def test_pvalue_in_unit_interval_and_symmetric(r, n):
    p = pearson_pvalue(r, n)
    assert 0.0 <= p <= 1.0
    assert p == pearson_pvalue(-r, n)


def test_pvalue_monotone_in_r():
    ps = [pearson_pvalue(r, 38) for r in np.linspace(0, 0.99, 50)]
    assert all(a >= b for a, b in zip(ps, ps[1:]))


def test_correlate_bundles_r_and_p():
    c = correlate([1, 2, 3, 4], [1, 3, 2, 4])
    assert c.n == 4
    assert c.r == pytest.approx(0.8)
    assert c.p_two_tailed == pytest.approx(pearson_pvalue(0.8, 4))


def test_group_summary_examples():
    assert group_summary([5]) == GroupSummary(5.0, 0.0, 1)
    g = group_summary([1, 3])
    assert (g.mean, g.se, g.n) == (2.0, pytest.approx(1.0), 2)
    assert group_summary([2, 2, 2]).se == 0.0
    with pytest.raises(InsufficientData):
        group_summary([])


def test_sigma_difference_examples():
    assert sigma_difference(3.0, GroupSummary(3.0, 0.5, 4)) == 0.0
    assert sigma_difference(0.00614, GroupSummary(0.00648, 0.00014, 10)) == pytest.approx(2.4286, abs=1e-4)
    assert sigma_difference(0.00614, GroupSummary(0.006205, 0.00019, 10)) == pytest.approx(0.3421, abs=1e-4)
    assert sigma_difference(1.61, GroupSummary(1.497, 0.0211, 10)) == pytest.approx(5.3555, abs=1e-4)
    with pytest.raises(DegenerateInput):
        sigma_difference(1.0, GroupSummary(2.0, 0.0, 3))


def test_welch_examples():
    t = welch_ttest([1, 2, 3, 4, 5], [3, 4, 5, 6, 7])
    assert t.t == pytest.approx(-2.0)
    assert t.df == pytest.approx(8.0)
    assert t.p_two_tailed == pytest.approx(0.080516, abs=1e-6)

    same = welch_ttest([1, 2, 3], [1, 2, 3])
    assert same.t == 0.0 and same.p_two_tailed == pytest.approx(1.0)

    jitter = [1e-9, -1e-9, 1e-9, -1e-9]
    near = welch_ttest([0 + j for j in jitter], [1 + j for j in jitter])
    assert near.p_two_tailed < 1e-6


def test_welch_errors():
    with pytest.raises(InsufficientData):
        welch_ttest([1], [1, 2])
    with pytest.raises(DegenerateInput):
        welch_ttest([1, 1], [2, 2])


@pytest.mark.filterwarnings("ignore:Precision loss:RuntimeWarning")
@settings(max_examples=100, deadline=None)
@given(st.lists(finite, min_size=2, max_size=20), st.lists(finite, min_size=2, max_size=20))
def test_welch_matches_scipy(xs, ys):
    try:
        ours = welch_ttest(xs, ys)
    except DegenerateInput:
        return
    ref = sps.ttest_ind(xs, ys, equal_var=False)
    assume(math.isfinite(ref.statistic))
    assert ours.t == pytest.approx(ref.statistic, rel=1e-7, abs=1e-9)
    assert ours.p_two_tailed == pytest.approx(ref.pvalue, rel=1e-6, abs=1e-12)
    assert ours.t == pytest.approx(-welch_ttest(ys, xs).t, rel=1e-12, abs=1e-12)
