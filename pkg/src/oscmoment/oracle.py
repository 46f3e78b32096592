"""Brute-force reference values by composite Gauss-Legendre quadrature.

The interval from 0 to ``b`` (either sign) is cut into equal panels no
longer than an eighth of a wavelength of ``J_m(kappa t)``; each panel gets
a 16-point rule.  The panel count doubles until two successive totals agree
to ``1e-15 * max(1, |total|)``.  Only the Bessel evaluator and the
Legendre rule are shared with the rest of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bessel import bessel_j_table
from .errors import OracleError
from .query import MomentQuery
from .quadrature import make_gauss_legendre

__all__ = ["OracleResult", "oracle_i1", "oracle_i2"]

_POINTS = 16
_MAX_HALVINGS = 12
_TOL = 1e-15


@dataclass(frozen=True)
class OracleResult:
    value_re: float
    value_im: float
    est_error: float
    panels: int

    @property
    def value(self) -> complex | float:
        return complex(self.value_re, self.value_im) if self.value_im else self.value_re


@lru_cache(maxsize=48)
def _panel_table(kappa: float, b: float, order: int, panels: int):
    rule = make_gauss_legendre(_POINTS)
    x = np.asarray(rule.nodes)
    w = np.asarray(rule.weights)
    h = b / panels
    left = h * np.arange(panels)
    t = (left[:, None] + 0.5 * h * (x[None, :] + 1.0)).ravel()
    wt = np.tile(0.5 * h * w, panels)
    J = bessel_j_table(kappa * t, order)
    for arr in (t, wt, J):
        arr.setflags(write=False)
    return t, wt, J


def _table_order(m: int) -> int:
    # a few shared table sizes keep the cache small across (n, m) sweeps
    return max(16, 8 * math.ceil((m + 1) / 8))


def _sum_at(kappa, b, n, m, oscillating, panels) -> tuple[float, float]:
    """Composite rule with a fixed number of panels."""
    t, wt, J = _panel_table(kappa, b, _table_order(m), panels)
    f = wt * t ** n * J[m]
    if oscillating:
        return math.fsum(f * np.cos(kappa * t)), math.fsum(f * np.sin(kappa * t))
    return math.fsum(f), 0.0


def _integrate(kappa, b, n, m, oscillating) -> tuple[float, float, int, float]:
    if b == 0:
        return 0.0, 0.0, 0, 0.0
    width = min(abs(b), math.pi / (4.0 * max(1.0, abs(kappa))))
    panels = max(1, math.ceil(abs(b) / width - 1e-12))
    prev = None
    for _ in range(_MAX_HALVINGS + 1):
        re, im = _sum_at(kappa, b, n, m, oscillating, panels)
        if prev is not None:
            diff = math.hypot(re - prev[0], im - prev[1])
            if diff <= _TOL * max(1.0, math.hypot(re, im)):
                return re, im, panels, diff
        prev = (re, im)
        panels *= 2
    raise OracleError(f"no convergence for n={n}, m={m}, kappa={kappa}, b={b}")


def _run(kappa, b, n, m, oscillating) -> OracleResult:
    re, im, panels, err = _integrate(float(kappa), float(b), n, m, oscillating)
    if err > 1e-14 * max(1.0, math.hypot(re, im)):
        raise OracleError("error estimate above 1e-14")
    return OracleResult(re, im, err, panels)


def oracle_i1(q: MomentQuery) -> OracleResult:
    """Reference value of ``int_0^b t^n J_m(kappa t) dt``."""
    return _run(q.kappa, q.b, q.n, q.m, False)


def oracle_i2(n: int, m: int, kappa: float, b: float) -> OracleResult:
    """Reference value of ``int_0^b t^n e^(i kappa t) J_m(kappa t) dt``."""
    q = MomentQuery(n, m, kappa, b)
    return _run(q.kappa, q.b, q.n, q.m, True)
