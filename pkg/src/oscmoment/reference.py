"""Classical series evaluators for ``I1(n, m, kappa, b)``.

Method 1 is the Neumann-type series

    I = 2 b^n / (kappa (n+m+1)) * sum_j (2j+m+1) R_j J_{2j+m+1}(kappa b),
    R_j = prod_{i=1..j} (m+2i-1-n) / (m+2i+1+n),

which terminates when ``n - m`` is odd and positive.  Method 2 is the
closed form through Lommel functions of the second kind,

    I = 2^n Gamma((m+n+1)/2) / (kappa^(n+1) Gamma((m-n+1)/2))
        + b / kappa^n [(n+m-1) J_m s_{n-1,m-1}(kb) - J_{m-1} s_{n,m}(kb)],

with ``s`` replaced by its large-argument asymptotic series; it is valid
only for ``kappa*b > 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bessel import bessel_j_seq
from .errors import DomainError
from .query import MomentQuery

__all__ = ["TruncationReport", "i1_method1", "i1_method2", "lommel_s2"]

_TERM_TOL = 1e-17


@dataclass(frozen=True)
class TruncationReport:
    value: float
    terms_used: int
    converged: bool
    terminated_exactly: bool = False


def i1_method1(q: MomentQuery, max_terms: int = 100) -> TruncationReport:
    """Truncated Neumann series with at most ``max_terms`` terms."""
    if max_terms < 1:
        raise DomainError("max_terms must be >= 1")
    n, m, k, b = q.n, q.m, q.kappa, q.b
    x = k * b
    J = bessel_j_seq(x, m + 2 * max_terms + 1)
    ax = abs(x)
    total = 0.0
    ratio = 1.0
    converged = exact = False
    used = 0
    for j in range(max_terms):
        order = 2 * j + m + 1
        term = order * ratio * J[order]
        total += term
        used = j + 1
        # past the turning point order ~ |x| the terms shrink monotonically
        if order > ax and abs(term) < _TERM_TOL * max(1.0, abs(total)):
            converged = True
            break
        num = m + 2 * j + 1 - n
        if num == 0:
            converged = exact = True
            break
        ratio *= num / (m + 2 * j + 3 + n)
    value = 2.0 * b ** n / (k * (n + m + 1)) * total
    return TruncationReport(value, used, converged, exact)


def _lommel_sum(mu: float, nu: float, t: float, terms: int) -> tuple[float, float, int]:
    # partial sum of the bracket, last term added, number of terms added
    inv_t2 = 1.0 / (t * t)
    total = 0.0
    term = 1.0
    used = 0
    nu2 = nu * nu
    for kk in range(terms):
        total += term
        used = kk + 1
        l = kk + 1
        f = (mu - 2 * l + 1) ** 2 - nu2
        if f == 0:
            term = 0.0
            break
        term *= -f * inv_t2
    return total, term, used


def lommel_s2(n_idx: float, m_idx: float, t: float, terms: int) -> float:
    """Asymptotic series of the Lommel function ``s^(2)_{n_idx, m_idx}(t)``.

    ``t^(n_idx-1) * sum_k (-1)^k prod_{l<=k} ((n_idx-2l+1)^2 - m_idx^2) / t^(2k)``,
    truncated after ``terms`` terms.  The series diverges; accuracy comes
    from large ``t``, not from more terms.
    """
    if not t > 0:
        raise DomainError("Lommel asymptotics need t > 0")
    if terms < 1:
        raise DomainError("terms must be >= 1")
    total, _, _ = _lommel_sum(n_idx, m_idx, t, terms)
    return t ** (n_idx - 1) * total


def _gamma_ratio_term(n: int, m: int, k: float) -> float:
    """``2^n Gamma((m+n+1)/2) / (kappa^(n+1) Gamma((m-n+1)/2))``."""
    den_arg = 0.5 * (m - n + 1)
    if den_arg <= 0 and den_arg == int(den_arg):
        return 0.0  # 1/Gamma vanishes at the poles
    sign = 1.0
    if den_arg < 0:
        # Gamma alternates in sign between consecutive negative integers
        if math.floor(-den_arg) % 2 == 0:
            sign = -1.0
    log_mag = (
        n * math.log(2.0)
        + math.lgamma(0.5 * (m + n + 1))
        - math.lgamma(den_arg)
        - (n + 1) * math.log(k)
    )
    return sign * math.exp(log_mag)


def i1_method2(q: MomentQuery, terms: int = 11) -> TruncationReport:
    """Lommel asymptotic form; requires ``kappa*b > 0``."""
    n, m, k, b = q.n, q.m, q.kappa, q.b
    z = k * b
    if not z > 0:
        raise DomainError("the Lommel form holds only for kappa*b > 0")
    if terms < 1:
        raise DomainError("terms must be >= 1")
    J = bessel_j_seq(z, max(m, 1))
    jm = J[m]
    jm1 = J[m - 1] if m else -J[1]
    sa, la, ua = _lommel_sum(n - 1, m - 1, z, terms)
    sb, lb, ub = _lommel_sum(n, m, z, terms)
    # s_{n-1,m-1}(z) = z^(n-2) sa,  s_{n,m}(z) = z^(n-1) sb; fold b/kappa^n in
    scale = b ** n / k  # b/kappa^n * z^(n-1)
    bracket = (n + m - 1) * jm * sa / z - jm1 * sb
    value = _gamma_ratio_term(n, m, k) + scale * bracket
    converged = (abs(la) < _TERM_TOL * max(1.0, abs(sa))
                 and abs(lb) < _TERM_TOL * max(1.0, abs(sb)))
    exact = la == 0.0 and lb == 0.0 and (ua < terms or ub < terms)
    return TruncationReport(value, max(ua, ub), converged or exact, exact)
