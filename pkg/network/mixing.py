"""
Mixing matrix of the minimal Naimark extension and its SU(2) factorisation.

The matrix M acts on the mode vector (a1, a2, a3) by a_k -> sum_l M_kl a_l:

    M = | 1/sqrt2    g/sqrt2    k/sqrt2 |
        | 1/sqrt2   -g/sqrt2   -k/sqrt2 |
        | 0         -k          g       |     with k = sqrt(1 - g^2)

It factors as M = R2 B13(t13) B23(t23) B12(t12), where R2 = diag(1, -1, 1)
and B_jk is the identity outside the (j, k) block [[cos t, sin t], [-sin t, cos t]].
"""

import logging
import math

import numpy as np

from network.gamma import kappa_of, validate_canonical_gamma
from network.types import CANONICAL_ORDERING, STAGE_MODES, MixingMatrix, Stage, Su2Plan
from utils.exceptions import DomainError

logger = logging.getLogger(__name__)

PI_ROTATION = np.diag([1.0, -1.0, 1.0]).astype(complex)


def build_mixing_matrix(gamma: float) -> MixingMatrix:
    """
    Build the unitary mixing matrix for a canonical gamma.

    Args:
        gamma: Real value in (0, 1]

    Returns:
        MixingMatrix with gamma and kappa recorded

    Raises:
        DomainError: If gamma lies outside (0, 1]
    """
    gamma = validate_canonical_gamma(gamma)
    kappa = kappa_of(gamma)
    root = 1.0 / math.sqrt(2.0)

    entries = np.array([
        [root, gamma * root, kappa * root],
        [root, -gamma * root, -kappa * root],
        [0.0, -kappa, gamma],
    ], dtype=complex)

    if kappa == 0.0:
        logger.warning("gamma = 1: mode a3 decouples from the network")
    return MixingMatrix(entries=entries, gamma=gamma, kappa=kappa)


def su2_block(theta: float, j: int, k: int) -> MixingMatrix:
    """
    Two-mode rotation embedded in the 3x3 identity.

    Args:
        theta: Rotation angle in radians
        j: First mode (1-based)
        k: Second mode (1-based), different from j

    Raises:
        DomainError: If j == k or a mode is not in {1, 2, 3}
    """
    if j == k:
        raise DomainError(f"su2_block needs two distinct modes, got ({j}, {k})")
    if j not in (1, 2, 3) or k not in (1, 2, 3):
        raise DomainError(f"Modes must be in {{1, 2, 3}}, got ({j}, {k})")

    c, s = math.cos(theta), math.sin(theta)
    entries = np.eye(3, dtype=complex)
    entries[j - 1, j - 1] = c
    entries[j - 1, k - 1] = s
    entries[k - 1, j - 1] = -s
    entries[k - 1, k - 1] = c
    return MixingMatrix(entries=entries)


def decompose(gamma: float) -> Su2Plan:
    """
    Factor the mixing matrix into two-mode rotations plus a pi rotation.

    The angles satisfy cos t23 = sqrt((1+g^2)/2), cos t13 = sqrt(2g^2/(1+g^2))
    and cos t12 = sqrt(g^2/(1+g^2)).
    """
    gamma = validate_canonical_gamma(gamma)
    kappa = kappa_of(gamma)
    norm = math.sqrt(1.0 + gamma * gamma)

    plan = Su2Plan(
        theta12=math.atan2(1.0, gamma),
        theta13=math.atan2(kappa, math.sqrt(2.0) * gamma),
        theta23=math.atan2(kappa, norm),
        pi_rotation_mode=2,
        ordering=CANONICAL_ORDERING,
        gamma=gamma,
    )
    logger.debug(f"Decomposed gamma={gamma}: {plan}")
    return plan


def stage_matrix(plan: Su2Plan, label: str) -> np.ndarray:
    """3x3 matrix of one plan stage."""
    if label == Stage.PI_ROTATION:
        return PI_ROTATION
    j, k = STAGE_MODES[label]
    return su2_block(plan.angle(label), j, k).entries


def compose_plan(plan: Su2Plan) -> MixingMatrix:
    """Multiply the plan's stage matrices in their recorded order."""
    entries = np.eye(3, dtype=complex)
    for label in plan.ordering:
        entries = entries @ stage_matrix(plan, label)

    kappa = kappa_of(plan.gamma) if plan.gamma is not None else None
    return MixingMatrix(entries=entries, gamma=plan.gamma, kappa=kappa)
