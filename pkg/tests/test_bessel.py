import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oscmoment import DomainError, bessel_j_seq
from oscmoment.bessel import bessel_j_table


def series_j(m, x, terms=80):
    # exact rational arithmetic avoids the cancellation of the alternating sum
    h = Fraction(x) / 2
    return float(sum((-1) ** k * h ** (2 * k + m) / (math.factorial(k) * math.factorial(k + m))
                     for k in range(terms)))


def test_zero_argument():
    assert bessel_j_seq(0.0, 3).values == (1.0, 0.0, 0.0, 0.0)


def test_j1_at_one():
    assert bessel_j_seq(1.0, 1)[1] == pytest.approx(0.44005058574493355, abs=2e-16)
    assert bessel_j_seq(1.0, 1)[1] == pytest.approx(series_j(1, 1.0), abs=2e-16)


def test_first_zero_of_j0():
    assert abs(bessel_j_seq(2.404825557695773, 0)[0]) < 1e-13


@pytest.mark.parametrize("x", [1e-3, 0.3, 2.5, 7.0, 15.0])
def test_matches_series(x):
    J = bessel_j_seq(x, 12)
    for m in range(13):
        assert J[m] == pytest.approx(series_j(m, x), rel=1e-13, abs=1e-300)


@pytest.mark.parametrize("x", [0.01, 0.5, 3.0, 10.0, 37.3, 99.9, 150.0, 250.0])
def test_against_mpmath(x):
    J = bessel_j_seq(x, 40)
    for m in range(41):
        exact = float(mp.besselj(m, x))
        # relative accuracy, relaxed to a few ulp of O(1) near zeros of J_m
        assert abs(J[m] - exact) <= max(1e-13 * abs(exact), 2e-15)


def test_deep_underflow_orders_are_tiny():
    J = bessel_j_seq(0.5, 200)
    assert all(abs(v) < 1e-280 or math.isclose(v, float(mp.besselj(m, 0.5)), rel_tol=1e-13)
               for m, v in enumerate(J.values))


@given(st.floats(min_value=-120.0, max_value=120.0))
@settings(max_examples=60, derandomize=True, deadline=None)
def test_symmetry_exact(x):
    a = bessel_j_seq(x, 25).values
    b = bessel_j_seq(-x, 25).values
    assert all(bv == (-1) ** m * av for m, (av, bv) in enumerate(zip(a, b)))


@given(st.floats(min_value=-120.0, max_value=120.0).filter(lambda v: abs(v) > 1e-3))
@settings(max_examples=60, derandomize=True, deadline=None)
def test_recurrence_residual(x):
    J = bessel_j_seq(x, 30).values
    for m in range(1, 30):
        resid = J[m - 1] + J[m + 1] - 2 * m / x * J[m]
        assert abs(resid) <= 1e-12 * max(1.0, 2 * m / abs(x))


@given(st.floats(min_value=-120.0, max_value=120.0))
@settings(max_examples=40, derandomize=True, deadline=None)
def test_normalization(x):
    M = int(abs(x)) + 60
    J = bessel_j_seq(x, M).values
    assert abs(J[0] + 2 * math.fsum(J[2::2]) - 1.0) <= 1e-12


def test_table_matches_scalar():
    xs = np.array([[-30.0, -1e-3, 0.0], [0.7, 12.0, 90.0]])
    T = bessel_j_table(xs, 10)
    assert T.shape == (11, 2, 3)
    for idx in np.ndindex(xs.shape):
        ref = bessel_j_seq(float(xs[idx]), 10).values
        assert np.allclose(T[(slice(None),) + idx], ref, rtol=0, atol=1e-15)


@pytest.mark.parametrize("x,order", [(math.nan, 2), (math.inf, 2), (1.0, -1)])
def test_domain_errors(x, order):
    with pytest.raises(DomainError):
        bessel_j_seq(x, order)
