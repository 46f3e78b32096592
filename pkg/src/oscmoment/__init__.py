"""Moments of highly oscillatory Bessel and Bessel-trigonometric functions.

``I1(n, m, kappa, b) = int_0^b t^n J_m(kappa t) dt`` and
``I2(n, m, kappa, b) = int_0^b t^n e^(i kappa t) J_m(kappa t) dt``.
"""

from .base import BaseEvalReport, i1_00, i1_00_steepest, i1_00_trapezoidal, ndsm_error_bound, trapz_error_bound
from .bessel import BesselSeq, bessel_j_seq
from .config import DEFAULT_CONFIG, DispatchConfig, load_config
from .dispatch import evaluate_i1, i1, route
from .errors import ConvergenceError, DomainError, OracleError
from .estimator import MomentTransformer
from .oracle import OracleResult, oracle_i1, oracle_i2
from .quadrature import QuadRule, make_gauss_laguerre, make_gauss_legendre
from .query import MomentQuery, RealMomentResult
from .recursive import i1_closed_superdiag, i1_diag, i1_even_superdiag, i1_method3, i1_subdiag
from .reference import TruncationReport, i1_method1, i1_method2, lommel_s2
from .trig import ComplexMomentResult, i2, i2_diag, i2_first_subdiag, i2_sub, i2_super

__version__ = "0.1.0"

__all__ = [
    "BaseEvalReport", "BesselSeq", "ComplexMomentResult", "ConvergenceError",
    "DEFAULT_CONFIG", "DispatchConfig", "DomainError", "MomentQuery",
    "MomentTransformer", "OracleError", "OracleResult", "QuadRule",
    "RealMomentResult", "TruncationReport", "bessel_j_seq", "evaluate_i1", "i1",
    "i1_00", "i1_00_steepest", "i1_00_trapezoidal", "i1_closed_superdiag",
    "i1_diag", "i1_even_superdiag", "i1_method1", "i1_method2", "i1_method3",
    "i1_subdiag", "i2", "i2_diag", "i2_first_subdiag", "i2_sub", "i2_super",
    "load_config", "lommel_s2", "make_gauss_laguerre", "make_gauss_legendre",
    "ndsm_error_bound", "oracle_i1", "oracle_i2", "route", "trapz_error_bound",
]
