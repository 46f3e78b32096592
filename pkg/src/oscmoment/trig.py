"""Closed forms for ``I2(n, m, kappa, b) = int_0^b t^n e^(i kappa t) J_m(kappa t) dt``.

Every case is a finite sum; no quadrature is involved.

* ``n >= m``: iterate the ``m -> m+1`` relation up to the diagonal, where
  ``I2(n, n) = e^(i kappa t) t^(n+1) (J_n - i J_{n+1}) / (2n+1)``.
* ``m = n + 1``: explicit formula whose only term surviving at ``t = 0``
  is ``-c_n J_0(0) / kappa``.
* ``m > n + 1``: iterate the ``m -> m-1`` relation down to ``m = n + 1``.

Coefficients that are powers of ``i`` times reals carry the power as an
index mod 4 and the real factor separately.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .bessel import bessel_j_seq
from .errors import DomainError

__all__ = [
    "ComplexMomentResult",
    "i2",
    "i2_diag",
    "i2_first_subdiag",
    "i2_sub",
    "i2_super",
]

_I_POW = (1.0, 1j, -1.0, -1j)


@dataclass(frozen=True)
class ComplexMomentResult:
    """Complex moment with its formula branch.

    ``work`` counts the terms summed, a proxy for the O(n + m) cost.
    """

    value: complex
    branch: str
    coeff_max: float = 1.0
    work: int = 0

    def transformed(self, sign: int, conjugate: bool) -> "ComplexMomentResult":
        v = self.value.conjugate() if conjugate else self.value
        return ComplexMomentResult(sign * v, self.branch, self.coeff_max, self.work)


def _check(n: int, kappa: float) -> None:
    if n < 0:
        raise DomainError("n must be nonnegative")
    if kappa == 0 or not math.isfinite(kappa):
        raise DomainError("kappa must be finite and nonzero")


def i2_diag(n: int, kappa: float, b: float) -> ComplexMomentResult:
    """``I2(n, n, kappa, b)``."""
    _check(n, kappa)
    J = bessel_j_seq(kappa * b, n + 1)
    value = cmath.exp(1j * kappa * b) * b ** (n + 1) * complex(J[n], -J[n + 1]) / (2 * n + 1)
    return ComplexMomentResult(value, "diag", 1.0, 1)


def _super_sum(n: int, m: int, J) -> tuple[complex, float, int]:
    # sum_{j=m..n} c_{j-m}/(n+j+1) (J_j - i J_{j+1}),
    # c_j = i^j * prod_{k=m}^{m+j-1} (n-k)/(n+k+1)
    acc = 0j
    mag = 1.0
    cmax = 1.0
    for p, j in enumerate(range(m, n + 1)):
        acc += _I_POW[p % 4] * (mag / (n + j + 1)) * complex(J[j], -J[j + 1])
        mag *= (n - j) / (n + j + 1)
        if p < n - m:
            cmax = max(cmax, mag)
    return acc, cmax, n - m + 1


def i2_super(n: int, m: int, kappa: float, b: float) -> ComplexMomentResult:
    """``n >= m``."""
    _check(n, kappa)
    if m < 0 or n < m:
        raise DomainError("needs n >= m >= 0")
    J = bessel_j_seq(kappa * b, n + 1)
    acc, cmax, work = _super_sum(n, m, J)
    value = cmath.exp(1j * kappa * b) * b ** (n + 1) * acc
    return ComplexMomentResult(value, "diag" if n == m else "super", cmax, work)


def _first_subdiag(n: int, kappa: float, t: float, J) -> tuple[complex, float, int]:
    c = [1.0]
    for k in range(n):
        c.append(c[-1] * 2.0 * (n - k) / kappa)
    e = cmath.exp(1j * kappa * t)
    cn_k = c[n] / kappa
    acc = complex(-cn_k, c[n] * t) * J[0]
    tj = 1.0
    for j in range(1, n + 1):
        tj *= t
        w = complex(c[n - j + 1] / (2 * j - 1) - c[n - j] / kappa, t * c[n - j] / (2 * j + 1))
        acc += w * tj * J[j]
    acc += tj * t * J[n + 1] / (2 * n + 1)
    # antiderivative at t = 0 is -c_n / kappa
    value = e * acc + cn_k
    return value, max(abs(x) for x in c), n + 2


def i2_first_subdiag(n: int, kappa: float, b: float) -> ComplexMomentResult:
    """``I2(n, n + 1, kappa, b)``."""
    _check(n, kappa)
    J = bessel_j_seq(kappa * b, n + 1)
    value, cmax, work = _first_subdiag(n, kappa, b, J)
    return ComplexMomentResult(value, "first_subdiag", cmax, work)


def i2_sub(n: int, m: int, kappa: float, b: float) -> ComplexMomentResult:
    """``m > n + 1``: reduce to ``I2(n, n + 1)``."""
    _check(n, kappa)
    if m <= n + 1:
        raise DomainError("needs m > n + 1")
    J = bessel_j_seq(kappa * b, m)
    # c_p = prod_{k=m+1-p}^{m} -i (n+k)/(n-k+1) = i^p * prod (n+k)/(k-n-1)
    acc = 0j
    mag = 1.0
    cmax = 1.0
    for p, j in enumerate(range(m, n + 1, -1)):
        acc += _I_POW[p % 4] * (mag / (n - j + 1)) * complex(J[j], J[j - 1])
        mag *= (n + j) / (j - n - 1)
        cmax = max(cmax, mag)
    tail = _I_POW[(m - n - 1) % 4] * mag
    fs, fs_cmax, fs_work = _first_subdiag(n, kappa, b, J)
    value = b ** (n + 1) * cmath.exp(1j * kappa * b) * acc + tail * fs
    return ComplexMomentResult(value, "sub", max(cmax, fs_cmax), m - n - 1 + fs_work)


def i2(n: int, m: int, kappa: float, b: float) -> ComplexMomentResult:
    """Route to the closed form for ``(n, m)`` after reducing to ``kappa > 0, b >= 0``.

    ``I2(n,m,-kappa,b) = (-1)^m conj(I2(n,m,kappa,b))`` and
    ``I2(n,m,kappa,-b) = (-1)^(n+m+1) conj(I2(n,m,kappa,b))``.
    """
    if n < 0 or m < 0:
        raise DomainError("n and m must be nonnegative")
    _check(n, kappa)
    if not abs(b) <= 1.0:
        raise DomainError(f"|b| must be <= 1, got {b}")
    sign = 1
    conj = False
    if kappa < 0:
        kappa = -kappa
        conj = not conj
        if m & 1:
            sign = -sign
    if b < 0:
        b = -b
        conj = not conj
        if not (n + m) & 1:
            sign = -sign
    if n >= m:
        res = i2_super(n, m, kappa, b)
    elif m == n + 1:
        res = i2_first_subdiag(n, kappa, b)
    else:
        res = i2_sub(n, m, kappa, b)
    if sign == 1 and not conj:
        return res
    return res.transformed(sign, conj)
