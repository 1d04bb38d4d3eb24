"""
Exception hierarchy shared by every zgamma app.

Domain errors mean the caller asked for something outside a parameter's
domain and map to exit code 2 at the command line. Numerical errors mean a
tolerance-based check failed and map to exit code 3.
"""

from typing import Optional, Tuple


class ZGammaError(Exception):
    """Base class for all zgamma errors."""

    exit_code = 1


class ConfigurationError(ZGammaError):
    """Raised for malformed CLI options or run-config files."""

    exit_code = 2


class DomainError(ZGammaError, ValueError):
    """Raised when a parameter lies outside its domain."""

    exit_code = 2


class DegenerateGammaError(DomainError):
    """Raised for gamma = 0, where the measured operator is single-mode."""


class TruncationError(DomainError):
    """Raised when a Fock cutoff cannot carry the requested weights or states."""


class RepresentabilityError(DomainError):
    """Raised when a preparation leaks too much mass past the Fock cutoff."""

    def __init__(self, message: str, prep_name: Optional[str] = None):
        super().__init__(message)
        self.prep_name = prep_name


class NaimarkConstraintError(DomainError):
    """Raised when the ancilla preparation has a non-zero mean amplitude."""


class NumericalError(ZGammaError):
    """Base class for tolerance-based numerical failures."""

    exit_code = 3


class CoverageError(NumericalError):
    """
    Raised when an outcome grid does not cover the density.

    Attributes:
        suggested_bounds: (x_min, x_max, y_min, y_max) that would cover it
    """

    def __init__(self, message: str, suggested_bounds: Optional[Tuple[float, float, float, float]] = None):
        if suggested_bounds is not None:
            bounds = ", ".join(f"{value:.6g}" for value in suggested_bounds)
            message = f"{message} (suggested bounds: {bounds})"
        super().__init__(message)
        self.suggested_bounds = suggested_bounds


class RescalingError(NumericalError):
    """Raised when a convolution kernel would need an extreme rescaling."""


class MassDeficitError(NumericalError):
    """Raised when a quadrature disk misses part of the displaced-state mass."""


class AccuracyError(NumericalError):
    """Raised when a truncated operator fails its exactness check."""
