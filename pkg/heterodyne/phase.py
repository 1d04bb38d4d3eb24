"""
Feasible phase: the distribution of arg(tau) over measurement outcomes.

P(theta_k) is proportional to the integral of K(r e^{i theta_k}) r dr along
a ray. Grid samples are interpolated bilinearly onto the rays and integrated
with the trapezoid rule; points outside the grid count as zero.
"""

import logging
import math
from typing import Optional

import numpy as np
from scipy import ndimage
from scipy.integrate import trapezoid

from heterodyne.types import PhaseReport
from measurement.density import outcome_density
from measurement.moments import empirical_moments, predicted_moments
from measurement.types import GridSpec, OutcomeGrid, Preparation
from network.gamma import validate_canonical_gamma
from utils.conf import get_setting
from utils.exceptions import CoverageError, DomainError

logger = logging.getLogger(__name__)

RADIAL_OVERSAMPLING = 4


def bin_centres(n_bins: int) -> np.ndarray:
    """Centres of n_bins equal bins covering (-pi, pi]."""
    return -math.pi + (np.arange(n_bins) + 0.5) * (2.0 * math.pi / n_bins)


def ray_integrals(grid: OutcomeGrid, theta: np.ndarray) -> np.ndarray:
    """Integral of K(r e^{i theta}) r dr from the origin to the farthest grid corner."""
    spec = grid.spec
    r_max = max(math.hypot(x, y) for x in (spec.x_min, spec.x_max) for y in (spec.y_min, spec.y_max))
    r = np.linspace(0.0, r_max, RADIAL_OVERSAMPLING * max(spec.nx, spec.ny))

    x = r[None, :] * np.cos(theta)[:, None]
    y = r[None, :] * np.sin(theta)[:, None]
    coordinates = np.array([(x - spec.x_min) / spec.dx, (y - spec.y_min) / spec.dy])
    values = ndimage.map_coordinates(np.asarray(grid.density), coordinates, order=1, mode='constant', cval=0.0)
    return trapezoid(values * r[None, :], r, axis=1)


def phase_from_grid(grid: OutcomeGrid, gamma: float, n_bins: int) -> PhaseReport:
    """
    Bin the outcome argument of a density grid.

    Raises:
        CoverageError: If the grid mass is out of tolerance or no ray carries mass
    """
    empirical_moments(grid)
    theta = bin_centres(n_bins)
    masses = np.clip(ray_integrals(grid, theta), 0.0, None)
    total = float(masses.sum())
    if total <= 0.0:
        raise CoverageError("No outcome mass on the phase rays; the grid does not surround its density")

    probability = masses / total
    resultant = np.sum(probability * np.exp(1j * theta))
    report = PhaseReport(
        gamma=gamma,
        theta=theta,
        probability=probability,
        circular_mean=float(np.angle(resultant)),
        circular_variance=float(1.0 - abs(resultant)),
    )
    logger.info(
        f"Feasible phase over {n_bins} bins: mean {report.circular_mean:.6f}, "
        f"circular variance {report.circular_variance:.6f}"
    )
    return report


def feasible_phase(prep: Preparation, gamma: float, grid: Optional[GridSpec] = None,
                   n_bins: Optional[int] = None) -> PhaseReport:
    """
    Phase distribution of the outcome tau for a canonical gamma.

    Args:
        prep: Product preparation
        gamma: Canonical gamma in (0, 1]
        grid: Outcome grid, or None for the automatic grid extended to contain tau = 0
        n_bins: Number of phase bins, or None for ZGAMMA_PHASE_BINS

    Returns:
        PhaseReport with probabilities summing to one

    Raises:
        CoverageError: If the grid is too narrow or its mass is out of tolerance
    """
    gamma = validate_canonical_gamma(gamma)
    n_bins = n_bins if n_bins is not None else get_setting('ZGAMMA_PHASE_BINS', 360)
    if n_bins < 2:
        raise DomainError(f"Need at least two phase bins, got {n_bins}")

    if grid is None:
        grid = GridSpec.around(predicted_moments(prep, gamma).predicted).including_origin()
    return phase_from_grid(outcome_density(prep, gamma, grid), gamma, n_bins)
