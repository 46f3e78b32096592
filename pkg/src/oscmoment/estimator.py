"""scikit-learn style transformer over batches of moment queries.

Each input row is ``(n, m, kappa, b)``.  ``MomentTransformer`` is stateless
apart from validating the configuration in ``fit``, so it can sit inside a
``Pipeline`` or be cloned by model-selection utilities.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .config import DispatchConfig
from .dispatch import evaluate_i1
from .errors import DomainError
from .oracle import oracle_i1, oracle_i2
from .query import MomentQuery
from .trig import i2

__all__ = ["MomentTransformer", "check_moment_array"]

_I1_METHODS = ("hybrid", "m1", "m2", "m3", "oracle")
_I2_METHODS = ("hybrid", "m3", "oracle")


def check_moment_array(X) -> np.ndarray:
    """Validate an ``(n_samples, 4)`` array of ``(n, m, kappa, b)`` rows.

    ``n`` and ``m`` must be nonnegative integers (stored as floats is fine),
    ``kappa`` finite and nonzero, and ``|b| <= 1``.
    """
    X = check_array(X, dtype=np.float64, ensure_min_samples=0)
    if X.shape[1] != 4:
        raise ValueError(f"expected 4 columns (n, m, kappa, b), got {X.shape[1]}")
    nm = X[:, :2]
    if np.any(nm < 0) or np.any(nm != np.round(nm)):
        raise DomainError("n and m must be nonnegative integers")
    if np.any(X[:, 2] == 0):
        raise DomainError("kappa must be nonzero")
    if np.any(np.abs(X[:, 3]) > 1):
        raise DomainError("|b| must be <= 1")
    return X


class MomentTransformer(TransformerMixin, BaseEstimator):
    """Map ``(n, m, kappa, b)`` rows to Bessel moment values.

    Parameters
    ----------
    family : {"i1", "i2"}
        ``i1`` gives ``int_0^b t^n J_m(kappa t) dt`` as one column; ``i2``
        gives the real and imaginary parts of the ``e^(i kappa t)``-weighted
        moment as two columns.
    method : str
        ``hybrid``, ``m1``, ``m2``, ``m3`` or ``oracle`` (``i2`` accepts
        ``hybrid``/``m3``, which are the same closed forms, and ``oracle``).
    kb_base_crossover, kb_hybrid, trapz_points, ggl_points, m1_terms, m2_terms, m1_cap
        Forwarded to :class:`DispatchConfig`.
    """

    def __init__(self, family="i1", method="hybrid", kb_base_crossover=24.0,
                 kb_hybrid=50.0, trapz_points=36, ggl_points=10, m1_terms=15,
                 m2_terms=11, m1_cap=100):
        self.family = family
        self.method = method
        self.kb_base_crossover = kb_base_crossover
        self.kb_hybrid = kb_hybrid
        self.trapz_points = trapz_points
        self.ggl_points = ggl_points
        self.m1_terms = m1_terms
        self.m2_terms = m2_terms
        self.m1_cap = m1_cap

    def fit(self, X, y=None):
        if self.family not in ("i1", "i2"):
            raise ValueError(f"family must be 'i1' or 'i2', got {self.family!r}")
        allowed = _I1_METHODS if self.family == "i1" else _I2_METHODS
        if self.method not in allowed:
            raise ValueError(f"method for {self.family} must be one of {allowed}")
        X = check_moment_array(X)
        self.config_ = DispatchConfig(
            kb_base_crossover=float(self.kb_base_crossover),
            kb_hybrid=float(self.kb_hybrid),
            trapz_points=int(self.trapz_points),
            ggl_points=int(self.ggl_points),
            m1_terms=int(self.m1_terms),
            m2_terms=int(self.m2_terms),
            m1_cap=int(self.m1_cap),
        )
        self.n_features_in_ = X.shape[1]
        return self

    def _one(self, row):
        q = MomentQuery(int(row[0]), int(row[1]), row[2], row[3])
        if self.family == "i1":
            if self.method == "oracle":
                return oracle_i1(q).value_re
            return evaluate_i1(q, self.method, self.config_).value
        if self.method == "oracle":
            o = oracle_i2(q.n, q.m, q.kappa, q.b)
            return o.value_re, o.value_im
        v = i2(q.n, q.m, q.kappa, q.b).value
        return v.real, v.imag

    def transform(self, X):
        check_is_fitted(self, "config_")
        X = check_moment_array(X)
        width = 1 if self.family == "i1" else 2
        out = np.empty((X.shape[0], width))
        for i, row in enumerate(X):
            out[i] = self._one(row)
        return out

    def get_feature_names_out(self, input_features=None):
        if self.family == "i1":
            return np.array(["i1"], dtype=object)
        return np.array(["i2_re", "i2_im"], dtype=object)
