"""Hybrid routing of ``I1`` queries among the three evaluation families.

After reducing to ``kappa > 0, b >= 0``:

* ``kappa*b > kb_hybrid``            -> Lommel asymptotics (``m2``)
* otherwise, ``kappa >= max(n, m)``  -> recursions (``m3``)
* otherwise                          -> Neumann series (``m1``)
"""

from __future__ import annotations

from .config import DEFAULT_CONFIG, DispatchConfig
from .query import MomentQuery, RealMomentResult
from .recursive import i1_method3
from .reference import i1_method1, i1_method2

__all__ = ["i1", "route", "evaluate_i1"]


def route(q: MomentQuery, cfg: DispatchConfig = DEFAULT_CONFIG) -> str:
    """Name of the family the dispatcher would use for ``q``."""
    kappa = abs(q.kappa)
    b = abs(q.b)
    if kappa * b > cfg.kb_hybrid:
        return "m2"
    if kappa >= max(q.n, q.m):
        return "m3"
    return "m1"


def _method1(q: MomentQuery, terms: int) -> RealMomentResult:
    rep = i1_method1(q, terms)
    return RealMomentResult(rep.value, "series", 0, 1.0, "m1", rep.terms_used)


def _method2(q: MomentQuery, terms: int) -> RealMomentResult:
    rep = i1_method2(q, terms)
    return RealMomentResult(rep.value, "asymptotic", 0, 1.0, "m2", rep.terms_used)


def evaluate_i1(q: MomentQuery, method: str = "hybrid",
                cfg: DispatchConfig = DEFAULT_CONFIG) -> RealMomentResult:
    """Evaluate with a forced family (``m1``, ``m2``, ``m3``) or ``hybrid``.

    Forced ``m1`` uses ``cfg.m1_cap`` terms and forced ``m2`` uses
    ``cfg.m2_terms``; neither normalizes signs, so ``m2`` raises
    :class:`DomainError` for ``kappa*b <= 0``.
    """
    if method == "hybrid":
        return i1(q, cfg)
    if method == "m1":
        return _method1(q, cfg.m1_cap)
    if method == "m2":
        return _method2(q, cfg.m2_terms)
    if method == "m3":
        return i1_method3(q, cfg)
    raise ValueError(f"unknown method {method!r}")


def i1(q: MomentQuery, cfg: DispatchConfig = DEFAULT_CONFIG) -> RealMomentResult:
    """``int_0^b t^n J_m(kappa t) dt`` by the hybrid scheme."""
    nq, sign = q.normalized()
    which = route(nq, cfg)
    if which == "m2":
        res = _method2(nq, cfg.m2_terms)
    elif which == "m3":
        res = i1_method3(nq, cfg)
    else:
        rep = i1_method1(nq, cfg.m1_terms)
        if not rep.converged and cfg.m1_cap > cfg.m1_terms:
            rep = i1_method1(nq, cfg.m1_cap)
        res = RealMomentResult(rep.value, "series", 0, 1.0, "m1", rep.terms_used)
    return res.with_sign(sign)
