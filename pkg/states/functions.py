"""
Characteristic functions, Wigner functions and quadrature moments.

Conventions: q = (a + a^dagger)/sqrt2, p = i(a^dagger - a)/sqrt2, so vacuum
variance is 1/2. chi(lambda) = Tr[rho D(lambda)] with
D(lambda) = exp(lambda a^dagger - lambda* a) = exp(i(u_q q + u_p p)),
u_q = sqrt2 Im lambda, u_p = -sqrt2 Re lambda. Wigner functions are
normalised to integrate to one over d^2 z = dx dy.
"""

import math
from typing import Union

import numpy as np

from states.laguerre import laguerre_function_series
from states.types import PrepKind, QuadStats, StatePrep

ComplexLike = Union[complex, np.ndarray]


def _scalar_or_array(value: np.ndarray, template) -> Union[complex, float, np.ndarray]:
    if np.ndim(template) == 0:
        return value.item()
    return value


def char_fn(prep: StatePrep, lam: ComplexLike) -> ComplexLike:
    """
    Symmetric characteristic function chi(lambda) of a preparation.

    Args:
        prep: Single-mode preparation
        lam: Complex scalar or array

    Returns:
        Complex value(s) with the shape of lam
    """
    lam_arr = np.asarray(lam, dtype=complex)
    modulus_sq = np.abs(lam_arr) ** 2

    if prep.kind == PrepKind.VACUUM:
        value = np.exp(-0.5 * modulus_sq).astype(complex)
    elif prep.kind == PrepKind.COHERENT:
        alpha = prep.alpha
        value = np.exp(-0.5 * modulus_sq + lam_arr * np.conj(alpha) - np.conj(lam_arr) * alpha)
    elif prep.kind == PrepKind.NUMBER_DIAGONAL:
        value = np.asarray(laguerre_function_series(prep.weights, modulus_sq)).astype(complex)
    else:
        u_q = math.sqrt(2.0) * lam_arr.imag
        u_p = -math.sqrt(2.0) * lam_arr.real
        quadratic = prep.var_q * u_q ** 2 + 2.0 * prep.cov_qp * u_q * u_p + prep.var_p * u_p ** 2
        value = np.exp(1j * (u_q * prep.mean_q + u_p * prep.mean_p) - 0.5 * quadratic)

    return _scalar_or_array(value, lam)


def wigner(prep: StatePrep, z: ComplexLike) -> Union[float, np.ndarray]:
    """
    Wigner function W(z), z = x + iy, with integral one over dx dy.

    Number-diagonal mixtures use W_m(z) = (2/pi)(-1)^m exp(-2|z|^2) L_m(4|z|^2).
    """
    z_arr = np.asarray(z, dtype=complex)

    if prep.kind in (PrepKind.VACUUM, PrepKind.COHERENT):
        value = (2.0 / np.pi) * np.exp(-2.0 * np.abs(z_arr - prep.alpha) ** 2)
    elif prep.kind == PrepKind.NUMBER_DIAGONAL:
        modulus_sq = np.abs(z_arr) ** 2
        signed = np.asarray(prep.weights) * (-1.0) ** np.arange(len(prep.weights))
        value = (2.0 / np.pi) * laguerre_function_series(signed, 4.0 * modulus_sq)
    else:
        d_q = math.sqrt(2.0) * z_arr.real - prep.mean_q
        d_p = math.sqrt(2.0) * z_arr.imag - prep.mean_p
        determinant = prep.var_q * prep.var_p - prep.cov_qp ** 2
        exponent = (prep.var_p * d_q ** 2 - 2.0 * prep.cov_qp * d_q * d_p + prep.var_q * d_p ** 2) / determinant
        # Jacobian 2 from (q, p) = sqrt2 (x, y)
        value = 2.0 * np.exp(-0.5 * exponent) / (2.0 * np.pi * math.sqrt(determinant))

    return _scalar_or_array(np.asarray(value, dtype=float), z)


def quad_stats(prep: StatePrep) -> QuadStats:
    """Quadrature means, variances and symmetrised covariance of a preparation."""
    if prep.kind == PrepKind.VACUUM:
        return QuadStats(0.0, 0.0, 0.5, 0.5, 0.0)
    if prep.kind == PrepKind.COHERENT:
        root = math.sqrt(2.0)
        return QuadStats(root * prep.alpha.real, root * prep.alpha.imag, 0.5, 0.5, 0.0)
    if prep.kind == PrepKind.NUMBER_DIAGONAL:
        weights = np.asarray(prep.weights)
        variance = float(np.dot(weights, np.arange(weights.size) + 0.5))
        return QuadStats(0.0, 0.0, variance, variance, 0.0)
    return QuadStats(prep.mean_q, prep.mean_p, prep.var_q, prep.var_p, prep.cov_qp)


def rotate(prep: StatePrep, angle: float) -> StatePrep:
    """
    Rotate a preparation in phase space, z -> z exp(i angle).

    Number-diagonal states and the vacuum are unchanged.
    """
    if prep.is_phase_insensitive or angle == 0.0:
        return prep
    if prep.kind == PrepKind.COHERENT:
        return StatePrep.coherent(prep.alpha * np.exp(1j * angle))

    c, s = math.cos(angle), math.sin(angle)
    rotation = np.array([[c, -s], [s, c]])
    mean = rotation @ np.array([prep.mean_q, prep.mean_p])
    covariance = rotation @ np.array([[prep.var_q, prep.cov_qp], [prep.cov_qp, prep.var_p]]) @ rotation.T
    return StatePrep.gaussian(mean[0], mean[1], covariance[0, 0], covariance[1, 1], covariance[0, 1])
