"""
Caves heterodyne operator as a Z-gamma measurement.

y_C = sqrt(1 + w_I/w_1) a1 + sqrt(1 - w_I/w_1) a2^dagger = sqrt(1 + w_I/w_1) Z_{gamma_C}
with gamma_C = sqrt((w_1 - w_I)/(w_1 + w_I)) and [y_C, y_C^dagger] = 2 w_I/w_1.
"""

import logging
import math

from heterodyne.types import HeterodyneSpec

logger = logging.getLogger(__name__)


def caves_gamma(spec: HeterodyneSpec) -> float:
    """
    Amplification parameter of the Caves operator.

    Args:
        spec: Signal and intermediate frequencies

    Returns:
        gamma_C in (0, 1]; 1 for omega_I = 0
    """
    gamma = math.sqrt((spec.omega_signal - spec.omega_intermediate) / (spec.omega_signal + spec.omega_intermediate))
    logger.debug(f"gamma_C = {gamma!r} for {spec}")
    return gamma


def caves_commutator(spec: HeterodyneSpec) -> float:
    """[y_C, y_C^dagger] = 2 omega_I / omega_1."""
    return 2.0 * spec.ratio


def caves_scale(spec: HeterodyneSpec) -> float:
    """Factor s with y_C = s Z_{gamma_C}."""
    return math.sqrt(1.0 + spec.ratio)
