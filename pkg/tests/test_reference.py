import math

import pytest

from oscmoment import DomainError, MomentQuery as Q, i1_closed_superdiag, i1_method1, i1_method2, i1_method3, lommel_s2

from conftest import oracle


def test_method1_base():
    r = i1_method1(Q(0, 0, 1.0, 1.0), 100)
    assert r.value == pytest.approx(0.9197304101, abs=1e-10)
    assert r.converged


def test_method1_terminates():
    r = i1_method1(Q(1, 0, 3.0, 1.0), 100)
    assert r.terminated_exactly and r.terms_used == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_method1_exact_termination(n):
    for m in range(n - 1, -1, -2):
        q = Q(n, m, 7.0, 0.9)
        r = i1_method1(q, 100)
        c = i1_closed_superdiag(q).value
        assert r.terminated_exactly
        assert abs(r.value - c) <= 1e-12 * abs(c)


def test_method1_against_oracle():
    assert abs(i1_method1(Q(5, 3, 10.0, 1.0), 100).value - oracle(5, 3, 10.0, 1.0)) <= 1e-13


def test_lommel_first_term():
    for n, m, t in ((3, 1, 2.0), (0, 4, 7.5), (6, 6, 30.0)):
        assert lommel_s2(n, m, t, 1) == pytest.approx(t ** (n - 1))


def test_lommel_two_terms():
    assert lommel_s2(1, 1, 5.0, 2) == pytest.approx(1 + 1 / 25.0)


def test_lommel_decay():
    terms = [lommel_s2(2, 0, 100.0, k + 1) - lommel_s2(2, 0, 100.0, k) for k in range(1, 4)]
    ratios = [abs(b / a) for a, b in zip(terms, terms[1:])]
    assert all(r < 0.05 for r in ratios)


def test_lommel_domain():
    with pytest.raises(DomainError):
        lommel_s2(1, 1, 0.0, 3)


@pytest.mark.parametrize("n,m,tol", [(0, 0, 1e-14), (5, 3, 1e-13)])
def test_method2_against_oracle(n, m, tol):
    assert abs(i1_method2(Q(n, m, 100.0, 1.0), 11).value - oracle(n, m, 100.0, 1.0)) <= tol


def test_method2_fails_small_kappa():
    errs = [abs(i1_method2(Q(n, n, 5.0, 1.0), 11).value - oracle(n, n, 5.0, 1.0)) for n in range(6)]
    assert max(errs) > 1e-12


def test_method2_domain():
    with pytest.raises(DomainError):
        i1_method2(Q(0, 0, 10.0, 0.0), 11)


@pytest.mark.parametrize("kb", [50.0, 64.0, 80.0, 100.0])
def test_method_agreement_band(kb):
    for n in range(9):
        for m in range(9):
            q = Q(n, m, kb, 1.0)
            vals = (i1_method1(q, 100).value, i1_method2(q, 11).value, i1_method3(q).value)
            assert max(vals) - min(vals) <= 1e-12


def test_method2_improves_with_kb():
    for n, m in ((0, 0), (3, 1), (4, 4), (0, 6), (8, 2)):
        errs = [abs(i1_method2(Q(n, m, kb, 1.0), 3).value - oracle(n, m, kb, 1.0))
                for kb in (50.0, 60.0, 80.0, 100.0)]
        inversions = sum(b > a for a, b in zip(errs, errs[1:]))
        assert inversions <= 1
