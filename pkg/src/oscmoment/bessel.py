"""Bessel functions of the first kind and integer order, in batches.

``J_0(x), ..., J_M(x)`` are produced together by Miller's downward
recurrence, normalized with ``J_0 + 2 * sum_k J_2k = 1``.  Tiny arguments
use the Maclaurin series order by order instead.  A scalar path (plain
floats) serves the moment formulas; a vectorized numpy path serves the
reference integrator, which needs many arguments at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = ["BesselSeq", "bessel_j_seq", "bessel_j_table"]

_SERIES_CUTOFF = 1e-2
_RESCALE_AT = 1e250
_RESCALE_BY = 1e-250


@dataclass(frozen=True)
class BesselSeq:
    """``values[m] == J_m(x)`` for ``m = 0..max_order``."""

    x: float
    max_order: int
    values: tuple[float, ...]

    def __getitem__(self, m: int) -> float:
        return self.values[m]

    def __len__(self) -> int:
        return len(self.values)


def _start_order(ax: float, max_order: int) -> int:
    # the margin past the turning point m ~ x must grow like x**(1/3)
    return max(max_order, math.ceil(ax)) + 16 + math.ceil(8.0 * ax ** (1.0 / 3.0))


def _series(ax: float, max_order: int) -> list[float]:
    # J_m(x) = sum_k (-1)^k (x/2)^(2k+m) / (k! (k+m)!)
    half = 0.5 * ax
    q = -half * half
    out = []
    lead = 1.0
    for m in range(max_order + 1):
        if m:
            lead *= half / m
        if lead == 0.0:
            out.extend([0.0] * (max_order + 1 - m))
            break
        total = lead
        term = lead
        k = 0
        while True:
            k += 1
            term *= q / (k * (k + m))
            total += term
            if abs(term) <= 1e-17 * abs(total):
                break
        out.append(total)
    return out


def _miller(ax: float, max_order: int) -> list[float]:
    start = _start_order(ax, max_order)
    out = [0.0] * (max_order + 1)
    nxt = 0.0
    cur = 1e-30
    norm = 0.0
    two_over_x = 2.0 / ax
    hi, lo = _RESCALE_AT, -_RESCALE_AT
    for k in range(start, 0, -1):
        if k <= max_order:
            out[k] = cur
        if not k & 1:
            norm += 2.0 * cur
        nxt, cur = cur, k * two_over_x * cur - nxt
        if cur > hi or cur < lo:
            cur *= _RESCALE_BY
            nxt *= _RESCALE_BY
            norm *= _RESCALE_BY
            for i in range(k, max_order + 1):
                out[i] *= _RESCALE_BY
    out[0] = cur
    norm += cur
    scale = 1.0 / norm
    return [v * scale for v in out]


def bessel_j_seq(x: float, max_order: int) -> BesselSeq:
    """Evaluate ``J_0(x), ..., J_max_order(x)`` at a real argument.

    ``J_m(-x) = (-1)^m J_m(x)`` is applied after evaluating at ``|x|``, so
    the symmetry holds bit for bit.

    Raises
    ------
    DomainError
        If ``x`` is not finite or ``max_order`` is negative.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"Bessel argument must be finite, got {x!r}")
    max_order = int(max_order)
    if max_order < 0:
        raise DomainError(f"max_order must be >= 0, got {max_order}")
    ax = abs(x)
    if ax == 0.0:
        vals = [0.0] * (max_order + 1)
        vals[0] = 1.0
    elif ax < _SERIES_CUTOFF:
        vals = _series(ax, max_order)
    else:
        vals = _miller(ax, max_order)
    if x < 0.0:
        vals = [-v if m & 1 else v for m, v in enumerate(vals)]
    return BesselSeq(x=x, max_order=max_order, values=tuple(vals))


def bessel_j_table(x, max_order: int) -> np.ndarray:
    """Vectorized counterpart of :func:`bessel_j_seq`.

    Returns an array of shape ``(max_order + 1,) + x.shape`` whose row ``m``
    holds ``J_m(x)``.
    """
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("Bessel arguments must be finite")
    if max_order < 0:
        raise DomainError(f"max_order must be >= 0, got {max_order}")
    shape = x.shape
    xf = x.ravel()
    ax = np.abs(xf)
    out = np.zeros((max_order + 1, xf.size))

    small = ax < _SERIES_CUTOFF
    for i in np.flatnonzero(small):
        if ax[i] == 0.0:
            out[0, i] = 1.0
        else:
            out[:, i] = _series(float(ax[i]), max_order)

    big = np.flatnonzero(~small)
    if big.size:
        xb = ax[big]
        start = _start_order(float(xb.max()), max_order)
        two_over_x = 2.0 / xb
        vals = np.zeros((max_order + 1, xb.size))
        nxt = np.zeros_like(xb)
        cur = np.full_like(xb, 1e-30)
        norm = np.zeros_like(xb)
        for k in range(start, 0, -1):
            if k <= max_order:
                vals[k] = cur
            if not k & 1:
                norm += 2.0 * cur
            prev = k * two_over_x * cur - nxt
            nxt, cur = cur, prev
            over = np.abs(cur) > _RESCALE_AT
            if over.any():
                cur[over] *= _RESCALE_BY
                nxt[over] *= _RESCALE_BY
                norm[over] *= _RESCALE_BY
                vals[k:, over] *= _RESCALE_BY
        vals[0] = cur
        norm += cur
        out[:, big] = vals * (1.0 / norm)

    odd = np.arange(max_order + 1) % 2 == 1
    neg = xf < 0.0
    if neg.any():
        out[np.ix_(odd, neg)] *= -1.0
    return out.reshape((max_order + 1,) + shape)
