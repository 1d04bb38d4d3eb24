"""
Monte Carlo draws from a gridded outcome density.

Each cell between neighbouring grid nodes gets the trapezoid mass of its
four corners. A cell is chosen by inverse CDF over the flattened masses, then
a point is placed uniformly inside it.
"""

import logging

import numpy as np

from measurement.types import OutcomeGrid
from utils.exceptions import CoverageError, DomainError

logger = logging.getLogger(__name__)


def cell_masses(grid: OutcomeGrid) -> np.ndarray:
    """Trapezoid mass of every grid cell, shape (nx - 1, ny - 1)."""
    density = grid.density
    corners = density[:-1, :-1] + density[1:, :-1] + density[:-1, 1:] + density[1:, 1:]
    return 0.25 * corners * grid.spec.dx * grid.spec.dy


def sample_outcomes(grid: OutcomeGrid, n: int, seed: int) -> np.ndarray:
    """
    Draw i.i.d. outcomes from a density grid.

    Args:
        grid: Outcome density
        n: Number of draws, at least 1
        seed: Seed of the numpy Generator; equal seeds give equal draws

    Returns:
        Complex array of n outcomes tau = x + iy

    Raises:
        DomainError: If n < 1
        CoverageError: If the grid carries no mass
    """
    if int(n) != n or n < 1:
        raise DomainError(f"Number of samples must be a positive integer, got {n}")
    n = int(n)

    masses = cell_masses(grid)
    total = masses.sum()
    if not total > 0:
        raise CoverageError("Cannot sample from a grid without probability mass")
    cdf = np.cumsum(masses.ravel()) / total

    rng = np.random.default_rng(seed)
    picks = np.searchsorted(cdf, rng.random(n), side='right')
    picks = np.minimum(picks, cdf.size - 1)
    ix, iy = np.unravel_index(picks, masses.shape)
    jitter = rng.random((2, n))

    x = grid.x[ix] + jitter[0] * grid.spec.dx
    y = grid.y[iy] + jitter[1] * grid.spec.dy
    logger.debug(f"Drew {n} outcomes with seed {seed}")
    return x + 1j * y
