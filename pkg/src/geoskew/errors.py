class DomainError(ValueError):
    """An input lies outside the documented domain of an operation."""


class UnsupportedAlphaError(DomainError):
    """An infinite alpha was passed where only finite values make sense."""


class ConvergenceError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""
