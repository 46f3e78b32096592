import math

import numpy as np
import pytest

from oscmoment import ConvergenceError, DomainError, make_gauss_laguerre, make_gauss_legendre
from oscmoment.quadrature import GAUSS_LAGUERRE, GAUSS_LEGENDRE, tridiagonal_eigen


def test_one_point_laguerre():
    r = make_gauss_laguerre(-0.5, 1)
    assert r.nodes[0] == pytest.approx(0.5, abs=1e-15)
    assert r.weights[0] == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_two_point_classical_laguerre():
    r = make_gauss_laguerre(0.0, 2)
    s = math.sqrt(2)
    assert np.allclose(r.nodes, [2 - s, 2 + s], rtol=1e-14)
    assert np.allclose(r.weights, [(2 + s) / 4, (2 - s) / 4], rtol=1e-14)


@pytest.mark.parametrize("k", range(20))
def test_half_laguerre_moments(k):
    r = make_gauss_laguerre(-0.5, 10)
    got = math.fsum(w * t ** k for t, w in zip(r.nodes, r.weights))
    assert got == pytest.approx(math.exp(math.lgamma(k + 0.5)), rel=1e-11)


def test_first_moment_gamma_three_halves():
    r = make_gauss_laguerre(-0.5, 10)
    assert r.apply(lambda t: t) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-13)


@pytest.mark.parametrize("alpha", [-0.75, 0.0, 1.5, 3.0])
def test_generalized_laguerre_moments(alpha):
    r = make_gauss_laguerre(alpha, 12)
    for k in range(24):
        got = math.fsum(w * t ** k for t, w in zip(r.nodes, r.weights))
        assert got == pytest.approx(math.exp(math.lgamma(k + alpha + 1)), rel=1e-11)


def test_legendre_small_rules():
    r1 = make_gauss_legendre(1)
    assert r1.nodes == (0.0,) or abs(r1.nodes[0]) < 1e-16
    assert r1.weights[0] == pytest.approx(2.0)
    r2 = make_gauss_legendre(2)
    assert np.allclose(r2.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)], atol=1e-15)
    assert np.allclose(r2.weights, [1.0, 1.0], atol=1e-15)


@pytest.mark.parametrize("k", range(0, 32, 2))
def test_legendre_even_moments(k):
    r = make_gauss_legendre(16)
    assert r.apply(lambda t: t ** k) == pytest.approx(2 / (k + 1), abs=1e-14)


def test_legendre_odd_moments_vanish():
    r = make_gauss_legendre(16)
    for k in range(1, 32, 2):
        assert abs(r.apply(lambda t: t ** k)) < 1e-15


def test_rules_against_numpy():
    t, w = np.polynomial.legendre.leggauss(24)
    r = make_gauss_legendre(24)
    assert np.allclose(r.nodes, t, atol=2e-15) and np.allclose(r.weights, w, atol=2e-15)


def test_deterministic_and_cached():
    a = make_gauss_laguerre(-0.5, 10)
    b = make_gauss_laguerre(-0.5, 10)
    assert a.nodes == b.nodes and a.weights == b.weights
    assert a.kind == GAUSS_LAGUERRE and make_gauss_legendre(4).kind == GAUSS_LEGENDRE


def test_nodes_sorted_positive_weights():
    for n in (1, 5, 10, 40, 64):
        r = make_gauss_laguerre(-0.5, n)
        assert all(x < y for x, y in zip(r.nodes, r.nodes[1:]))
        assert all(w > 0 for w in r.weights)


def test_eigen_solver_against_numpy():
    rng = np.random.default_rng(7)
    d = rng.normal(size=20)
    e = rng.normal(size=19)
    vals, first = tridiagonal_eigen(d, e)
    A = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    ref_vals, ref_vecs = np.linalg.eigh(A)
    order = np.argsort(vals)
    assert np.allclose(np.asarray(vals)[order], ref_vals, atol=1e-12)
    assert np.allclose(np.asarray(first)[order] ** 2, ref_vecs[0] ** 2, atol=1e-12)


@pytest.mark.parametrize("alpha,n", [(-1.0, 5), (-2.0, 5), (0.0, 0)])
def test_domain_errors(alpha, n):
    with pytest.raises(DomainError):
        make_gauss_laguerre(alpha, n)


def test_convergence_error_is_runtime_error():
    assert issubclass(ConvergenceError, RuntimeError)
