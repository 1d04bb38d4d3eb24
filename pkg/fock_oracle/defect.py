"""
Numerical identity-resolution defect of the two-mode pre-measurement basis.

The states |z>> = D1(z)|gamma>> with |gamma>> = sqrt(1 - gamma^2) sum_n gamma^n |n,n>
resolve (1 - gamma^2) (1 x gamma^(2 N2)) instead of the identity:

    int d^2z/pi |z>><<z| = (1 - gamma^2) (1 x gamma^(2 N2))

The integral is done in polar form, Gauss-Legendre in s = |z|^2 and a
uniform rule in the angle, which is exact for the trigonometric factors.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from fock_oracle.displacement import displacement_matrix
from fock_oracle.types import DefectResult
from network.gamma import validate_canonical_gamma
from utils.conf import get_setting
from utils.exceptions import DomainError, MassDeficitError

logger = logging.getLogger(__name__)

COMPLETENESS_TOLERANCE = 1e-6


@dataclass(frozen=True)
class DefectQuadrature:
    """Polar quadrature for the disk |z|^2 <= radius_sq."""
    radial_nodes: int = 240
    angular_nodes: Optional[int] = None
    radius_sq: Optional[float] = None

    def resolved(self, n_max: int) -> 'DefectQuadrature':
        return DefectQuadrature(
            radial_nodes=self.radial_nodes,
            angular_nodes=self.angular_nodes or 4 * n_max + 16,
            radius_sq=self.radius_sq or 4.0 * n_max + 50.0,
        )

    def nodes(self):
        """Complex nodes z_k and weights w_k with sum_k w_k f(z_k) ~ int d^2z/pi f(z)."""
        s, s_weights = np.polynomial.legendre.leggauss(self.radial_nodes)
        s = 0.5 * self.radius_sq * (s + 1.0)
        s_weights = 0.5 * self.radius_sq * s_weights

        phi = 2.0 * math.pi * np.arange(self.angular_nodes) / self.angular_nodes
        phi_weight = 2.0 * math.pi / self.angular_nodes

        z = np.sqrt(s)[:, None] * np.exp(1j * phi)[None, :]
        weights = (0.5 * s_weights[:, None] * phi_weight / math.pi) * np.ones_like(phi)[None, :]
        return z.ravel(), weights.ravel()


def expected_defect(gamma: float, n_max: int) -> np.ndarray:
    """(1 - gamma^2) (1 x gamma^(2 N2)) on the (m, n2) index m*(n_max+1) + n2."""
    levels = n_max + 1
    diagonal = (1.0 - gamma ** 2) * np.tile(gamma ** (2 * np.arange(levels)), levels)
    return np.diag(diagonal)


def identity_defect(gamma: float, n_max: int = 8, quadrature: Optional[DefectQuadrature] = None) -> DefectResult:
    """
    Integrate |z>><<z| d^2z/pi over a disk and compare with the closed form.

    Args:
        gamma: Canonical gamma in (0, 1); at gamma = 1 the defect vanishes identically
        n_max: Per-mode cutoff of the two-mode space
        quadrature: Polar quadrature, or None for the defaults

    Returns:
        DefectResult with the numerical matrix, the closed form and their max deviation

    Raises:
        DomainError: If gamma = 1
        MassDeficitError: If the disk misses more than 1e-6 of some displaced state
    """
    gamma = validate_canonical_gamma(gamma)
    if gamma == 1.0:
        raise DomainError("The identity-resolution defect is identically zero at gamma = 1")
    quadrature = (quadrature or DefectQuadrature()).resolved(n_max)
    levels = n_max + 1

    z, weights = quadrature.nodes()
    elements = displacement_matrix(z, n_max)

    completeness = np.einsum('k,kmn->mn', weights, np.abs(elements) ** 2)
    min_completeness = float(completeness.min())
    if min_completeness < 1.0 - COMPLETENESS_TOLERANCE:
        raise MassDeficitError(
            f"Quadrature disk |z|^2 <= {quadrature.radius_sq} captures only {min_completeness:.8f} "
            f"of the displaced Fock states; enlarge radius_sq"
        )

    amplitudes = math.sqrt(1.0 - gamma ** 2) * gamma ** np.arange(levels)
    states = (elements * amplitudes[None, None, :]).reshape(z.size, levels * levels)
    matrix = np.einsum('k,ki,kj->ij', weights, states, states.conj())

    expected = expected_defect(gamma, n_max)
    deviation = float(np.max(np.abs(matrix - expected)))
    tolerance = get_setting('ZGAMMA_DEFECT_TOLERANCE', 1e-4)
    logger.info(f"Identity defect for gamma={gamma}, n_max={n_max}: max deviation {deviation:.3e}")
    return DefectResult(
        gamma=gamma,
        n_max=n_max,
        matrix=matrix,
        expected=expected,
        max_deviation=deviation,
        tolerance=tolerance,
        min_completeness=min_completeness,
    )
