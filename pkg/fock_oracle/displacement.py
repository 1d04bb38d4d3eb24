"""
Displacement matrix elements and truncated single-mode density matrices.

D_mn(beta) = <m|D(beta)|n> follows the Cahill-Glauber closed form:

    m >= n: sqrt(n!/m!) beta^(m-n) exp(-|beta|^2/2) L_n^(m-n)(|beta|^2)
    m <  n: sqrt(m!/n!) (-beta*)^(n-m) exp(-|beta|^2/2) L_m^(n-m)(|beta|^2)
"""

import logging
import math

import numpy as np
from scipy import linalg, special

from states.functions import char_fn
from states.types import PrepKind, StatePrep

logger = logging.getLogger(__name__)

CHARACTERISTIC_CUTOFF = 37.0
MAX_QUADRATURE_POINTS = 1025


def displacement_element(m: int, n: int, beta: np.ndarray) -> np.ndarray:
    """<m|D(beta)|n> for an array of displacements."""
    beta = np.asarray(beta, dtype=complex)
    modulus_sq = np.abs(beta) ** 2
    envelope = np.exp(-0.5 * modulus_sq)
    low, high = min(m, n), max(m, n)
    ratio = math.exp(0.5 * (special.gammaln(low + 1) - special.gammaln(high + 1)))
    laguerre = special.eval_genlaguerre(low, high - low, modulus_sq)
    factor = beta ** (m - n) if m >= n else (-np.conj(beta)) ** (n - m)
    return ratio * factor * envelope * laguerre


def displacement_matrix(beta: np.ndarray, n_max: int) -> np.ndarray:
    """
    Truncated displacement matrices for an array of displacements.

    Returns:
        Array of shape beta.shape + (n_max + 1, n_max + 1)
    """
    beta = np.asarray(beta, dtype=complex)
    levels = n_max + 1
    out = np.empty(beta.shape + (levels, levels), dtype=complex)
    for m in range(levels):
        for n in range(levels):
            out[..., m, n] = displacement_element(m, n, beta)
    return out


def coherent_amplitudes(alpha: complex, n_max: int) -> np.ndarray:
    """c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!) for n = 0..n_max."""
    amplitudes = np.empty(n_max + 1, dtype=complex)
    amplitudes[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for n in range(1, n_max + 1):
        amplitudes[n] = amplitudes[n - 1] * alpha / math.sqrt(n)
    return amplitudes


def _gaussian_density_matrix(prep: StatePrep, n_max: int) -> np.ndarray:
    """rho = (1/pi) int d^2 lambda chi(lambda) D(-lambda), by a uniform trapezoid rule."""
    covariance = np.array([[prep.var_q, prep.cov_qp], [prep.cov_qp, prep.var_p]])
    smallest, largest = linalg.eigvalsh(covariance)
    radius = math.sqrt(CHARACTERISTIC_CUTOFF / smallest)

    mean_z = math.hypot(prep.mean_q, prep.mean_p) / math.sqrt(2.0)
    extent = mean_z + 6.0 * math.sqrt(0.5 * largest) + math.sqrt(n_max + 0.5) + 3.0
    step = math.pi / (2.0 * extent)
    count = min(MAX_QUADRATURE_POINTS, 2 * int(math.ceil(radius / step)) + 1)
    if count == MAX_QUADRATURE_POINTS:
        logger.warning(f"Gaussian quadrature capped at {count} points per axis for {prep}")

    axis = np.linspace(-radius, radius, count)
    weight = (axis[1] - axis[0]) ** 2 / math.pi
    lam = axis[:, None] + 1j * axis[None, :]
    chi = char_fn(prep, lam)

    levels = n_max + 1
    rho = np.empty((levels, levels), dtype=complex)
    for m in range(levels):
        for n in range(levels):
            rho[m, n] = weight * np.sum(chi * displacement_element(m, n, -lam))
    return 0.5 * (rho + rho.conj().T)


def fock_density_matrix(prep: StatePrep, n_max: int) -> np.ndarray:
    """
    Density matrix of a preparation truncated to n = 0..n_max.

    The trace falls short of one by the population above the cutoff.
    """
    levels = n_max + 1
    if prep.kind == PrepKind.VACUUM:
        rho = np.zeros((levels, levels), dtype=complex)
        rho[0, 0] = 1.0
        return rho
    if prep.kind == PrepKind.COHERENT:
        amplitudes = coherent_amplitudes(prep.alpha, n_max)
        return np.outer(amplitudes, amplitudes.conj())
    if prep.kind == PrepKind.NUMBER_DIAGONAL:
        weights = np.zeros(levels)
        kept = np.asarray(prep.weights[:levels], dtype=float)
        weights[:kept.size] = kept
        return np.diag(weights).astype(complex)
    return _gaussian_density_matrix(prep, n_max)
