"""
FFT inversion of two-dimensional characteristic functions.

Densities over the complex plane tau = x + iy are recovered from a
characteristic function f(lambda), lambda = u + iv, through

    D(x, y) = (1/pi^2) * integral du dv exp(2i(u*y - v*x)) f(u + iv)

With k1 = 2v and k2 = -2u this is the ordinary 2-D inverse Fourier transform
of phi(k1, k2) = f(-k2/2 + i*k1/2). On an n-point axis x_j = x_0 + j*dx the
frequency axis is k_m = (m - n/2)*dk with dk = 2*pi/(n*dx), which gives

    D_jl = (dk1*dk2 / 4pi^2) * (-1)^(j+l) * FFT2[phi(k_m, k_n) exp(-i(k_m x_0 + k_n y_0))]_jl
"""

import logging
from typing import Callable, Tuple

import numpy as np

logger = logging.getLogger(__name__)


def frequency_axis(axis: np.ndarray) -> np.ndarray:
    """Centred angular-frequency axis conjugate to a uniform sample axis."""
    n = axis.size
    step = axis[1] - axis[0]
    return (np.arange(n) - n // 2) * (2.0 * np.pi / (n * step))


def invert_characteristic(
    fn: Callable[[np.ndarray], np.ndarray],
    x: np.ndarray,
    y: np.ndarray,
) -> Tuple[np.ndarray, float]:
    """
    Invert a characteristic function onto a rectangular grid.

    Args:
        fn: Vectorised characteristic function of a complex argument
        x: Uniform real-part axis of the outcome grid (even length)
        y: Uniform imaginary-part axis of the outcome grid (even length)

    Returns:
        Tuple of (real density array indexed [ix, iy], max imaginary residue)
    """
    k1 = frequency_axis(x)
    k2 = frequency_axis(y)
    k1_grid, k2_grid = np.meshgrid(k1, k2, indexing='ij')

    phi = np.asarray(fn(-0.5 * k2_grid + 0.5j * k1_grid), dtype=complex)
    phi = phi * np.exp(-1j * (k1_grid * x[0] + k2_grid * y[0]))

    transformed = np.fft.fft2(phi)
    signs = np.outer((-1.0) ** np.arange(x.size), (-1.0) ** np.arange(y.size))
    dk1 = k1[1] - k1[0]
    dk2 = k2[1] - k2[0]
    density = transformed * signs * (dk1 * dk2 / (4.0 * np.pi ** 2))

    residue = float(np.max(np.abs(density.imag)))
    logger.debug(f"Inverted characteristic function on {x.size}x{y.size} grid, imaginary residue {residue:.3e}")
    return density.real, residue
