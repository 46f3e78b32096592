"""Recursive closed forms for ``I1(n, m, kappa, b) = int_0^b t^n J_m(kappa t) dt``.

Four regimes of ``n - m``:

* ``n = m + 1 + 2s``: finite closed form, no base integral.
* ``n = m``: reduces to ``I1(0, 0)`` through ``I(n,m) = -t^n J_{m-1}/kappa
  + (n+m-1)/kappa I(n-1,m-1)``.
* ``n = m + 2s``, ``s >= 1``: reduces to the diagonal case.
* ``m > n``: first down to ``I1(0, m-n)``, then down the ``m -> m-2``
  ladder to ``I1(0,1) = -J_0/kappa`` or ``I1(0,0)``.

Each formula gives an antiderivative; the definite value subtracts its
limit at ``t = 0``, which is nonzero only through a ``J_0`` term.
Coefficients are running products; ``coeff_max`` records their largest
magnitude because it bounds how much the base-integral error is amplified.
"""

from __future__ import annotations

from .base import BaseEvalReport, i1_00
from .bessel import bessel_j_seq
from .config import DEFAULT_CONFIG, DispatchConfig
from .errors import DomainError
from .query import MomentQuery, RealMomentResult

__all__ = [
    "i1_closed_superdiag",
    "i1_diag",
    "i1_even_superdiag",
    "i1_subdiag",
    "i1_method3",
]


def _products(factors) -> list[float]:
    c = [1.0]
    for f in factors:
        c.append(c[-1] * f)
    return c


def _cmax(*coeff_lists) -> float:
    return max(abs(c) for cs in coeff_lists for c in cs)


def _base(q: MomentQuery, base: BaseEvalReport | None) -> float:
    if base is None:
        base = i1_00(q.kappa, q.b)
    return base.value


def i1_closed_superdiag(q: MomentQuery) -> RealMomentResult:
    """Closed form for ``n = m + 1 + 2s``."""
    n, m, k, t = q.n, q.m, q.kappa, q.b
    if n <= m or (n - m) % 2 == 0:
        raise DomainError("closed form needs n - m odd and positive")
    s = (n - m - 1) // 2
    c = _products(-4.0 * (s - i) * (m + s - i) / (k * k) for i in range(s))
    J = bessel_j_seq(k * t, m + 1)
    t2 = t * t
    poly_a = 0.0
    poly_b = 0.0
    t2j = 1.0
    for j in range(s + 1):
        poly_a += c[s - j] * t2j
        poly_b += c[s - j] * 2 * j * t2j
        t2j *= t2
    tm = t ** m
    value = tm * t * J[m + 1] * poly_a / k + tm * J[m] * poly_b / (k * k)
    return RealMomentResult(value, "closed_form", 0, _cmax(c))


def _diag_parts(m: int, k: float, t: float, J) -> tuple[float, float, list[float]]:
    """Sum part and base multiplier of the diagonal formula."""
    c = _products((2 * (m - i) - 1) / k for i in range(m))
    acc = 0.0
    tj = 1.0
    for j in range(1, m + 1):
        tj *= t
        acc += c[m - j] * tj * J[j - 1]
    return -acc / k, c[m], c


def i1_diag(q: MomentQuery, base: BaseEvalReport | None = None) -> RealMomentResult:
    """``n = m``: reduction to ``I1(0, 0, kappa, b)`` (``base``)."""
    if q.n != q.m:
        raise DomainError("diagonal formula needs n == m")
    J = bessel_j_seq(q.kappa * q.b, q.m)
    part, mult, c = _diag_parts(q.m, q.kappa, q.b, J)
    value = part + mult * _base(q, base)
    return RealMomentResult(value, "reduce_to_base", 1, _cmax(c))


def i1_even_superdiag(q: MomentQuery, base: BaseEvalReport | None = None) -> RealMomentResult:
    """``n = m + 2s`` with ``s >= 1``: reduction to the diagonal case."""
    n, m, k, t = q.n, q.m, q.kappa, q.b
    if n <= m or (n - m) % 2:
        raise DomainError("needs n - m even and positive")
    s = (n - m) // 2
    c = _products(-(2 * (s - i) - 1) * (2 * (m + s - i) - 1) / (k * k) for i in range(s))
    J = bessel_j_seq(k * t, m + 1)
    t2 = t * t
    poly_a = 0.0
    poly_b = 0.0
    t2j = 1.0
    for j in range(1, s + 1):
        t2j *= t2
        poly_a += c[s - j] * t2j
        poly_b += c[s - j] * (2 * j - 1) * t2j
    # t^(m-1) * t^(2j) is written as t^m * t^(2j-1) to stay finite at t = 0
    tm = t ** m
    poly_b = poly_b / t if t != 0 else 0.0
    value = tm * J[m + 1] * poly_a / k + tm * J[m] * poly_b / (k * k)
    dpart, dmult, cd = _diag_parts(m, k, t, J)
    value += c[s] * (dpart + dmult * _base(q, base))
    return RealMomentResult(value, "reduce_to_diag", 1, _cmax(c, [c[s] * x for x in cd]))


def _subdiag_odd(n: int, s: int, k: float, t: float, J) -> tuple[float, list[float]]:
    # m = n + 1 + 2s; c_j = prod 2(n+s-l)/kappa
    c = _products(2.0 * (n + s - l) / k for l in range(n))
    v = 0.0
    tj = t
    for j in range(2, n + 1):
        tj *= t
        v -= c[n - j] / k * tj * J[j + 2 * s]
    if s == 0:
        if n >= 1:
            v -= c[n - 1] / k * t * J[1]
    else:
        lead = c[n] / (2 * s) + (c[n - 1] / k if n >= 1 else 0.0)
        v -= lead * t * J[2 * s + 1]
        mid = 0.0
        for j in range(1, s):
            mid += (2 * j + 1) / (2 * j * (j + 1)) * J[2 * j + 1]
        v -= c[n] * t * (mid + 0.5 * J[1])
    # -c_n J_0(kappa t)/kappa evaluated between 0 and t
    v -= c[n] / k * (J[0] - 1.0)
    return v, c


def _subdiag_even(n: int, s: int, k: float, t: float, J, base: float) -> tuple[float, list[float]]:
    # m = n + 2s, s >= 1; c_j = prod (2(n+s-l)-1)/kappa
    c = _products((2 * (n + s - l) - 1) / k for l in range(n))
    v = 0.0
    tj = t
    for j in range(2, n + 1):
        tj *= t
        v -= c[n - j] / k * tj * J[j + 2 * s - 1]
    lead = c[n] / (2 * s - 1) + (c[n - 1] / k if n >= 1 else 0.0)
    v -= lead * t * J[2 * s]
    mid = 0.0
    for j in range(1, s):
        mid += 4 * j / (4 * j * j - 1) * J[2 * j]
    v -= c[n] * t * (mid + J[0])
    v += c[n] * base
    return v, c


def i1_subdiag(q: MomentQuery, base: BaseEvalReport | None = None) -> RealMomentResult:
    """``m > n``: odd ``m - n`` is closed form, even ``m - n`` needs ``base``."""
    n, m, k, t = q.n, q.m, q.kappa, q.b
    if m <= n:
        raise DomainError("subdiagonal formulas need m > n")
    J = bessel_j_seq(k * t, m)
    if (m - n) % 2:
        v, c = _subdiag_odd(n, (m - n - 1) // 2, k, t, J)
        return RealMomentResult(v, "subdiag_odd", 0, _cmax(c))
    v, c = _subdiag_even(n, (m - n) // 2, k, t, J, _base(q, base))
    return RealMomentResult(v, "subdiag_even", 1, _cmax(c))


def i1_method3(q: MomentQuery, cfg: DispatchConfig = DEFAULT_CONFIG) -> RealMomentResult:
    """Route to the recursive formula matching the sign and parity of ``n - m``.

    Signs of ``kappa`` and ``b`` are normalized first, so results for
    ``(kappa, b)`` and ``(-kappa, b)``, ``(kappa, -b)`` differ only in sign.
    """
    nq, sign = q.normalized()
    d = nq.n - nq.m
    if d > 0 and d % 2:
        res = i1_closed_superdiag(nq)
    else:
        base = i1_00(nq.kappa, nq.b, cfg)
        if d == 0:
            res = i1_diag(nq, base)
        elif d > 0:
            res = i1_even_superdiag(nq, base)
        else:
            res = i1_subdiag(nq, base)
    return res.with_sign(sign)
