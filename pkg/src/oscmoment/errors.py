"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is valid."""


class ConvergenceError(RuntimeError):
    """An iterative procedure failed to converge."""


class OracleError(ConvergenceError):
    """The brute-force reference integrator could not reach its tolerance."""
