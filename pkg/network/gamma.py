"""
Canonical reduction of the amplification parameter gamma.

Any non-zero complex gamma is brought to a real value in (0, 1]. The phase
is absorbed by a rotation of mode 2. When |gamma| > 1 the mode labels are
swapped, using Z_gamma = gamma * Z'^dagger_{1/gamma}.
"""

import logging
import math

import numpy as np

from network.types import GammaParam
from utils.exceptions import DegenerateGammaError, DomainError

logger = logging.getLogger(__name__)


def reduce_gamma(gamma: complex) -> GammaParam:
    """
    Reduce a complex gamma to canonical form.

    Args:
        gamma: Finite, non-zero complex parameter

    Returns:
        GammaParam with reduced modulus, phase, swap flag and scale

    Raises:
        DegenerateGammaError: If gamma is zero
        DomainError: If gamma is not finite
    """
    gamma = complex(gamma)
    if not (math.isfinite(gamma.real) and math.isfinite(gamma.imag)):
        raise DomainError(f"gamma must be finite, got {gamma}")
    if gamma == 0:
        raise DegenerateGammaError(
            "gamma = 0 reduces Z to the single-mode operator a1; the measurement degenerates to homodyne"
        )

    magnitude = abs(gamma)
    phase = float(np.angle(gamma))
    if phase <= -math.pi:
        phase = math.pi

    if magnitude <= 1.0:
        param = GammaParam(raw=gamma, reduced=magnitude, phase=phase, swapped=False, scale=1.0)
    else:
        param = GammaParam(raw=gamma, reduced=1.0 / magnitude, phase=phase, swapped=True, scale=magnitude)

    logger.debug(f"Reduced gamma {gamma} to {param}")
    return param


def validate_canonical_gamma(gamma: float) -> float:
    """
    Check that gamma is a real value in (0, 1].

    Raises:
        DegenerateGammaError: If gamma is zero
        DomainError: Otherwise outside (0, 1]
    """
    if isinstance(gamma, complex):
        if gamma.imag != 0:
            raise DomainError(f"Canonical gamma must be real, got {gamma}; reduce it first")
        gamma = gamma.real
    gamma = float(gamma)
    if gamma == 0:
        raise DegenerateGammaError("gamma = 0 is degenerate")
    if not (0.0 < gamma <= 1.0):
        raise DomainError(f"Canonical gamma must lie in (0, 1], got {gamma}; reduce it first")
    return gamma


def kappa_of(gamma: float) -> float:
    """kappa = sqrt(1 - gamma^2), the ancilla coupling."""
    gamma = validate_canonical_gamma(gamma)
    return math.sqrt(max(0.0, 1.0 - gamma * gamma))


def quadrature_commutator(gamma: float) -> float:
    """Imaginary part of [X_gamma, Y_gamma] = i kappa^2 / 2."""
    return 0.5 * kappa_of(gamma) ** 2
