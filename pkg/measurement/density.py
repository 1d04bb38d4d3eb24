"""
Outcome densities of the Z-gamma measurement.

Two independent routes are provided:

* outcome_density inverts Xi(lambda) by FFT on the outcome grid.
* convolution_density convolves reflected, rescaled Wigner functions:
  K = W1 * G2 * G3 with G2(s) = W2(s*/gamma)/gamma^2 and
  G3(s) = W3(s*/kappa)/kappa^2. h_density is the two-mode part W1 * G2.
"""

import logging
from typing import Optional

import numpy as np
from scipy import signal

from measurement.generating import moment_generating_fn
from measurement.moments import predicted_moments
from measurement.types import GridSpec, OutcomeGrid, Preparation, QuadratureMoments
from network.gamma import kappa_of, validate_canonical_gamma
from states.functions import wigner
from states.types import StatePrep
from utils.conf import get_setting
from utils.exceptions import CoverageError, NumericalError, RescalingError
from utils.fourier import invert_characteristic

logger = logging.getLogger(__name__)

RINGING_WARNING = 1e-8
IMAGINARY_WARNING = 1e-9
MIN_RESCALING = 1e-3


def resolve_grid(moments: QuadratureMoments, grid: Optional[GridSpec]) -> GridSpec:
    """
    Return the grid to use for a density with the given moments.

    Args:
        moments: Predicted moments of the density
        grid: Explicit grid, or None for mean +/- ZGAMMA_GRID_SIGMAS deviations

    Raises:
        CoverageError: If an explicit grid misses mean +/- ZGAMMA_COVERAGE_SIGMAS deviations
    """
    if grid is None:
        grid = GridSpec.around(moments)
        logger.info(f"Using automatic grid {grid.bounds} at {grid.nx}x{grid.ny}")
        return grid

    required = get_setting('ZGAMMA_COVERAGE_SIGMAS', 3.0)
    if not grid.covers(moments, required):
        raise CoverageError(
            f"Grid {grid.bounds} does not span +/-{required} standard deviations of the outcome marginals",
            suggested_bounds=GridSpec.around(moments).bounds,
        )
    return grid


def _require_finite(values: np.ndarray, source: str) -> None:
    bad = int(np.count_nonzero(~np.isfinite(values)))
    if bad:
        raise NumericalError(f"The {source} density has {bad} non-finite values out of {values.size}")


def _clamped(spec: GridSpec, values: np.ndarray, residue: float, source: str) -> OutcomeGrid:
    _require_finite(values, source)
    raw_minimum = float(values.min())
    if raw_minimum < -RINGING_WARNING:
        logger.warning(f"Clamping negative ringing down to {raw_minimum:.3e} on the {source} density")
    if residue > IMAGINARY_WARNING:
        logger.warning(f"Imaginary residue {residue:.3e} exceeds {IMAGINARY_WARNING}")
    return OutcomeGrid(
        spec=spec,
        density=np.clip(values, 0.0, None),
        raw_minimum=raw_minimum,
        imag_residue=residue,
        source=source,
    )


def outcome_density(prep: Preparation, gamma: float, grid: Optional[GridSpec] = None) -> OutcomeGrid:
    """
    Outcome density K(tau) by 2-D FFT inversion of Xi(lambda).

    Args:
        prep: Product preparation
        gamma: Canonical gamma in (0, 1]
        grid: Grid spec, or None for the automatic grid

    Returns:
        OutcomeGrid with negative ringing clamped to zero

    Raises:
        CoverageError: If the grid is too narrow
        NumericalError: If the inverted density holds non-finite values
    """
    moments = predicted_moments(prep, gamma).predicted
    spec = resolve_grid(moments, grid)

    values, residue = invert_characteristic(
        lambda lam: moment_generating_fn(prep, gamma, lam), spec.x, spec.y,
    )
    logger.debug(f"FFT density for gamma={gamma}: min {values.min():.3e}, imaginary residue {residue:.3e}")
    return _clamped(spec, values, residue, 'fft')


def _reflected_kernel(prep: StatePrep, scale: float, spec: GridSpec) -> np.ndarray:
    """Density of scale * conj(z), z ~ W_prep, on all grid offsets."""
    offsets_x = (np.arange(2 * spec.nx - 1) - (spec.nx - 1)) * spec.dx
    offsets_y = (np.arange(2 * spec.ny - 1) - (spec.ny - 1)) * spec.dy
    offsets = offsets_x[:, None] + 1j * offsets_y[None, :]
    return wigner(prep, np.conj(offsets) / scale) / scale ** 2


def _convolve(values: np.ndarray, kernel: np.ndarray, spec: GridSpec) -> np.ndarray:
    full = signal.fftconvolve(values, kernel, mode='full') * (spec.dx * spec.dy)
    return full[spec.nx - 1:2 * spec.nx - 1, spec.ny - 1:2 * spec.ny - 1]


def _check_scale(name: str, value: float) -> None:
    if value < MIN_RESCALING:
        raise RescalingError(
            f"{name} = {value:.3g} is below {MIN_RESCALING}; the convolution kernel cannot be resolved, "
            "use the FFT density instead"
        )


def h_density(rho1: StatePrep, rho2: StatePrep, gamma: float, grid: Optional[GridSpec] = None) -> OutcomeGrid:
    """
    Two-mode density H(tau) = W1 * G2 by direct Wigner convolution.

    H is a quasi-density and may dip below zero; values are not clamped.

    Raises:
        RescalingError: If gamma < 1e-3
    """
    gamma = validate_canonical_gamma(gamma)
    _check_scale('gamma', gamma)

    if grid is None:
        intrinsic = predicted_moments(Preparation(rho1, rho2, StatePrep.vacuum()), gamma)
        moments = intrinsic.predicted
        grid = GridSpec.around(QuadratureMoments(
            mean_q1=moments.mean_q1, mean_p2=moments.mean_p2,
            var_q1=intrinsic.intrinsic.var_x, var_p2=intrinsic.intrinsic.var_y, cov=intrinsic.intrinsic.cov_xy,
        ))

    values = _convolve(wigner(rho1, grid.points()), _reflected_kernel(rho2, gamma, grid), grid)
    _require_finite(values, "h-convolution")
    return OutcomeGrid(spec=grid, density=values, raw_minimum=float(values.min()), source='h-convolution')


def convolution_density(prep: Preparation, gamma: float, grid: Optional[GridSpec] = None) -> OutcomeGrid:
    """
    Outcome density K = H * G3, independent of the FFT route.

    At gamma = 1 the ancilla decouples and K = H.

    Raises:
        RescalingError: If gamma < 1e-3 or 0 < kappa < 1e-3
    """
    gamma = validate_canonical_gamma(gamma)
    kappa = kappa_of(gamma)
    spec = resolve_grid(predicted_moments(prep, gamma).predicted, grid)

    partial = h_density(prep.rho1, prep.rho2, gamma, spec)
    if kappa == 0.0:
        values = np.asarray(partial.density)
    else:
        _check_scale('kappa', kappa)
        values = _convolve(partial.density, _reflected_kernel(prep.sigma, kappa, spec), spec)
    return _clamped(spec, values, 0.0, 'convolution')


def husimi_function(prep: StatePrep, spec: GridSpec) -> np.ndarray:
    """Husimi function Q(tau) = <tau|rho|tau>/pi of a single mode on a grid."""
    return _convolve(wigner(prep, spec.points()), _reflected_kernel(StatePrep.vacuum(), 1.0, spec), spec)
