"""Moment queries and real-valued results."""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["MomentQuery", "RealMomentResult"]


@dataclass(frozen=True)
class MomentQuery:
    """Identifies ``int_0^b t**n J_m(kappa t) dt`` (or its trigonometric twin)."""

    n: int
    m: int
    kappa: float
    b: float

    def __post_init__(self):
        try:
            n = operator.index(self.n)
            m = operator.index(self.m)
        except TypeError:
            raise DomainError("n and m must be integers") from None
        if n < 0 or m < 0:
            raise DomainError(f"n and m must be nonnegative, got n={n}, m={m}")
        kappa = float(self.kappa)
        b = float(self.b)
        if not math.isfinite(kappa) or kappa == 0.0:
            raise DomainError(f"kappa must be finite and nonzero, got {kappa}")
        if not abs(b) <= 1.0:
            raise DomainError(f"|b| must be <= 1, got {b}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "b", b)

    @property
    def kb(self) -> float:
        return self.kappa * self.b

    def normalized(self) -> tuple["MomentQuery", int]:
        """Equivalent query with ``kappa > 0`` and ``b >= 0`` plus the sign factor.

        Uses ``I(n,m,-kappa,b) = (-1)^m I(n,m,kappa,b)`` and
        ``I(n,m,kappa,-b) = (-1)^(n+m+1) I(n,m,kappa,b)``.
        """
        sign = 1
        kappa, b = self.kappa, self.b
        if kappa < 0:
            kappa = -kappa
            if self.m & 1:
                sign = -sign
        if b < 0:
            b = -b
            if not (self.n + self.m) & 1:
                sign = -sign
        if kappa == self.kappa and b == self.b:
            return self, 1
        return MomentQuery(self.n, self.m, kappa, b), sign


@dataclass(frozen=True)
class RealMomentResult:
    """Value of a real moment with routing and stability telemetry.

    ``route`` names the evaluation family (``m1`` Neumann series, ``m2``
    Lommel asymptotics, ``m3`` recursions); ``method`` the concrete formula.
    ``coeff_max`` is the largest recursion coefficient magnitude used.
    """

    value: float
    method: str
    base_calls: int = 0
    coeff_max: float = 1.0
    route: str = "m3"
    terms_used: int = 0

    def with_sign(self, sign: int) -> "RealMomentResult":
        if sign == 1:
            return self
        return RealMomentResult(-self.value, self.method, self.base_calls,
                                self.coeff_max, self.route, self.terms_used)
