"""Gauss rules built with the Golub-Welsch construction.

Nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix of the
orthogonal polynomial family; weights are ``mu_0 * v_0**2`` where ``v_0`` is
the first component of each normalized eigenvector.  The eigenproblem is
solved by implicit QL with Wilkinson shifts, tracking only the first row of
the accumulated rotation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError, DomainError

__all__ = [
    "QuadRule",
    "GAUSS_LAGUERRE",
    "GAUSS_LEGENDRE",
    "make_gauss_laguerre",
    "make_gauss_legendre",
    "tridiagonal_eigen",
]

GAUSS_LAGUERRE = "gauss_laguerre_generalized"
GAUSS_LEGENDRE = "gauss_legendre"

_MAX_SWEEPS = 60


@dataclass(frozen=True)
class QuadRule:
    """Nodes and weights of a fixed Gauss rule."""

    kind: str
    alpha: float | None
    n_points: int
    nodes: tuple[float, ...]
    weights: tuple[float, ...]

    def apply(self, f) -> float:
        """``sum_j w_j f(t_j)`` summed left to right."""
        return math.fsum(w * f(t) for t, w in zip(self.nodes, self.weights))


def tridiagonal_eigen(diag, offdiag):
    """Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    Parameters
    ----------
    diag : sequence of float
        Main diagonal, length ``n``.
    offdiag : sequence of float
        Sub-diagonal, length ``n - 1``.

    Returns
    -------
    (eigenvalues, first_components)
        Both as lists sorted by increasing eigenvalue.
    """
    d = [float(v) for v in diag]
    n = len(d)
    e = [float(v) for v in offdiag] + [0.0]
    if len(e) != n:
        raise DomainError("offdiag must have length len(diag) - 1")
    z = [0.0] * n
    if n:
        z[0] = 1.0
    eps = 2.0 ** -52

    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_SWEEPS:
                raise ConvergenceError("tridiagonal QL iteration did not converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    order = sorted(range(n), key=d.__getitem__)
    return [d[i] for i in order], [z[i] for i in order]


def _golub_welsch(kind, alpha, diag, offdiag, mu0) -> QuadRule:
    nodes, first = tridiagonal_eigen(diag, offdiag)
    weights = [mu0 * v * v for v in first]
    return QuadRule(kind, alpha, len(nodes), tuple(nodes), tuple(weights))


@lru_cache(maxsize=None)
def _laguerre(alpha: float, n_points: int) -> QuadRule:
    diag = [2 * k + alpha + 1.0 for k in range(n_points)]
    off = [math.sqrt(k * (k + alpha)) for k in range(1, n_points)]
    return _golub_welsch(GAUSS_LAGUERRE, alpha, diag, off, math.gamma(alpha + 1.0))


@lru_cache(maxsize=None)
def _legendre(n_points: int) -> QuadRule:
    off = [k / math.sqrt(4.0 * k * k - 1.0) for k in range(1, n_points)]
    rule = _golub_welsch(GAUSS_LEGENDRE, None, [0.0] * n_points, off, 2.0)
    # the eigen-solve leaves O(eps) asymmetry; symmetrize about 0
    nodes = rule.nodes
    weights = rule.weights
    half = n_points // 2
    sym_nodes = list(nodes)
    sym_weights = list(weights)
    for j in range(half):
        k = n_points - 1 - j
        x = 0.5 * (nodes[k] - nodes[j])
        w = 0.5 * (weights[j] + weights[k])
        sym_nodes[j], sym_nodes[k] = -x, x
        sym_weights[j] = sym_weights[k] = w
    if n_points % 2:
        sym_nodes[half] = 0.0
    return QuadRule(GAUSS_LEGENDRE, None, n_points, tuple(sym_nodes), tuple(sym_weights))


def make_gauss_laguerre(alpha: float, n_points: int) -> QuadRule:
    """Generalized Gauss-Laguerre rule for the weight ``t**alpha * exp(-t)`` on ``[0, inf)``.

    Rules are cached; repeated calls return the same object.
    """
    alpha = float(alpha)
    if not alpha > -1.0:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if int(n_points) < 1:
        raise DomainError(f"n_points must be >= 1, got {n_points}")
    return _laguerre(alpha, int(n_points))


def make_gauss_legendre(n_points: int) -> QuadRule:
    """Gauss-Legendre rule on ``[-1, 1]`` (cached)."""
    if int(n_points) < 1:
        raise DomainError(f"n_points must be >= 1, got {n_points}")
    return _legendre(int(n_points))
