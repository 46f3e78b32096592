"""The base integral ``int_0^b J_0(kappa t) dt``.

Small ``kappa*b``: trapezoidal (rectangle) rule on the pi-periodic form

    I = (1 / 2pi) int_0^pi 2b sinc(kappa b sin(phi)) dphi.

Large ``kappa*b``: numerical steepest descent,

    I = 1/kappa - (2b/pi) int_0^inf p^(-1/2) e^(-p)
            Re(e^(i kb) (kb + ip)^(-1) (p - 2i kb)^(-1/2)) dp,

with the improper integral done by generalized Gauss-Laguerre (alpha=-1/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, DispatchConfig
from .errors import DomainError
from .quadrature import GAUSS_LAGUERRE, QuadRule, make_gauss_laguerre

__all__ = [
    "BaseEvalReport",
    "C_STAR",
    "i1_00",
    "i1_00_steepest",
    "i1_00_trapezoidal",
    "ndsm_error_bound",
    "trapz_error_bound",
]

TRAPEZOIDAL = "trapezoidal"
STEEPEST = "steepest_descent"
ZERO = "zero_shortcut"


def _optimal_strip() -> float:
    # minimizer of cosh(c/2)/c: root of x*tanh(x) = 1 with x = c/2
    x = 1.2
    for _ in range(50):
        f = x * math.tanh(x) - 1.0
        df = math.tanh(x) + x / math.cosh(x) ** 2
        step = f / df
        x -= step
        if abs(step) < 1e-16:
            break
    return 2.0 * x


C_STAR = _optimal_strip()


@dataclass(frozen=True)
class BaseEvalReport:
    value: float
    method: str
    points_used: int
    bound: float


def trapz_error_bound(kappa_b: float, n_points: int, c: float = C_STAR) -> float:
    """A-priori error of the N-point trapezoidal rule.

    ``8 pi exp(kb*C - N c) / (1 - exp(-N c))`` with ``C = cosh(c/2)``.
    """
    if not c > 0:
        raise DomainError("c must be positive")
    if n_points < 1:
        raise DomainError("n_points must be >= 1")
    nc = n_points * c
    return 8.0 * math.pi * math.exp(kappa_b * math.cosh(0.5 * c) - nc) / -math.expm1(-nc)


def ndsm_error_bound(kappa_b: float, b: float, n_points: int) -> float:
    """A-priori error of steepest descent with an N-point Gauss-Laguerre rule.

    ``(2^(3/2) b / pi) N! Gamma(N + 1/2) kb^(-2N - 3/2)``, evaluated in log space.
    """
    if not kappa_b > 0 or not b > 0:
        raise DomainError("kappa_b and b must be positive")
    if n_points < 1:
        raise DomainError("n_points must be >= 1")
    log_bound = (
        1.5 * math.log(2.0) + math.log(b) - math.log(math.pi)
        + math.lgamma(n_points + 1.0) + math.lgamma(n_points + 0.5)
        - (2 * n_points + 1.5) * math.log(kappa_b)
    )
    return math.exp(log_bound)


def i1_00_trapezoidal(kappa: float, b: float, n_points: int = 36) -> BaseEvalReport:
    """Trapezoidal evaluation; requires ``kappa*b >= 0``."""
    if kappa == 0:
        raise DomainError("kappa must be nonzero")
    if n_points < 1:
        raise DomainError("n_points must be >= 1")
    kb = kappa * b
    if kb < 0:
        raise DomainError("normalize signs so that kappa*b >= 0")
    bound = trapz_error_bound(kb, n_points)
    if b == 0:
        return BaseEvalReport(0.0, TRAPEZOIDAL, n_points, bound)
    # sin(phi_j) = sin(phi_{N-j}): sum over half the nodes
    h = math.pi / n_points
    total = 1.0  # sinc(0) at phi = 0
    for j in range(1, (n_points + 1) // 2):
        x = kb * math.sin(j * h)
        total += 2.0 * (math.sin(x) / x)
    if n_points % 2 == 0:
        total += math.sin(kb) / kb
    return BaseEvalReport(b * total / n_points, TRAPEZOIDAL, n_points, bound)


def i1_00_steepest(kappa: float, b: float, rule: QuadRule | None = None) -> BaseEvalReport:
    """Steepest-descent evaluation; requires ``kappa*b > 0``."""
    if rule is None:
        rule = make_gauss_laguerre(-0.5, 10)
    if rule.kind != GAUSS_LAGUERRE or rule.alpha != -0.5:
        raise DomainError("need a generalized Gauss-Laguerre rule with alpha = -1/2")
    kb = kappa * b
    if not kb > 0:
        raise DomainError("steepest descent requires kappa*b > 0")
    phase = cmath.exp(1j * kb)
    total = 0.0
    for t, w in zip(rule.nodes, rule.weights):
        total += w * (phase / ((kb + 1j * t) * cmath.sqrt(t - 2j * kb))).real
    value = 1.0 / kappa - (2.0 * b / math.pi) * total
    return BaseEvalReport(value, STEEPEST, rule.n_points, ndsm_error_bound(kb, b, rule.n_points))


def i1_00(kappa: float, b: float, cfg: DispatchConfig = DEFAULT_CONFIG) -> BaseEvalReport:
    """``int_0^b J_0(kappa t) dt`` for any signs of ``kappa`` and ``b``."""
    if kappa == 0:
        raise DomainError("kappa must be nonzero")
    if b == 0:
        return BaseEvalReport(0.0, ZERO, 0, 0.0)
    k = abs(kappa)
    ab = abs(b)
    if k * ab < cfg.kb_base_crossover:
        rep = i1_00_trapezoidal(k, ab, cfg.trapz_points)
    else:
        rep = i1_00_steepest(k, ab, make_gauss_laguerre(-0.5, cfg.ggl_points))
    if b < 0:
        rep = BaseEvalReport(-rep.value, rep.method, rep.points_used, rep.bound)
    return rep
