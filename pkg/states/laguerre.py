"""
Weighted Laguerre sums by the three-term recurrence.

    L_0 = 1,  L_1 = 1 - x,  n L_n = (2n - 1 - x) L_{n-1} - (n - 1) L_{n-2}

laguerre_function_series folds exp(-x/2) into the recurrence. The Laguerre
functions exp(-x/2) L_n(x) are bounded by one for x >= 0 while L_n(x) itself
overflows for wide arguments.
"""

import math
from typing import Sequence, Union

import numpy as np

from utils.exceptions import DomainError

ArrayLike = Union[float, np.ndarray]

# Recurrence values are renormalised once they exceed this magnitude
RESCALE_LIMIT = 1e100


def laguerre_series(coefficients: Sequence[float], x: ArrayLike) -> ArrayLike:
    """
    Evaluate sum_m c_m L_m(x) in one upward pass.

    Args:
        coefficients: Real coefficients c_0..c_M, any sign
        x: Scalar or array argument

    Returns:
        Same shape as x
    """
    coefficients = np.asarray(coefficients, dtype=float)
    x_arr = np.asarray(x, dtype=float)

    previous = np.zeros_like(x_arr)
    current = np.ones_like(x_arr)
    total = coefficients[0] * current
    for n in range(1, coefficients.size):
        previous, current = current, ((2 * n - 1 - x_arr) * current - (n - 1) * previous) / n
        if coefficients[n] != 0.0:
            total = total + coefficients[n] * current

    if np.ndim(x) == 0:
        return float(total)
    return total


def laguerre_function_series(coefficients: Sequence[float], x: ArrayLike) -> ArrayLike:
    """
    Evaluate sum_m c_m exp(-x/2) L_m(x) in one upward pass without overflow.

    The pair (L_{n-1}, L_n) is carried with a per-point log scale that starts
    at -x/2 and absorbs any growth beyond RESCALE_LIMIT.

    Args:
        coefficients: Real coefficients c_0..c_M, any sign
        x: Scalar or array argument, x >= 0

    Returns:
        Same shape as x
    """
    coefficients = np.asarray(coefficients, dtype=float)
    x_arr = np.asarray(x, dtype=float)

    previous = np.zeros_like(x_arr)
    current = np.ones_like(x_arr)
    log_scale = -0.5 * x_arr
    total = coefficients[0] * np.exp(log_scale)
    for n in range(1, coefficients.size):
        previous, current = current, ((2 * n - 1 - x_arr) * current - (n - 1) * previous) / n
        magnitude = np.maximum(np.abs(current), np.abs(previous))
        large = magnitude > RESCALE_LIMIT
        if np.any(large):
            divisor = np.where(large, magnitude, 1.0)
            previous = previous / divisor
            current = current / divisor
            log_scale = log_scale + np.log(divisor)
        if coefficients[n] != 0.0:
            total = total + coefficients[n] * current * np.exp(log_scale)

    if np.ndim(x) == 0:
        return float(total)
    return total


def laguerre_weighted_sum(weights: Sequence[float], x: ArrayLike) -> ArrayLike:
    """
    Evaluate sum_m p_m L_m(x) for a probability vector p.

    Raises:
        DomainError: If the weights are not a probability vector or x < 0
    """
    weights = np.asarray(weights, dtype=float)
    if weights.size == 0 or np.any(weights < 0) or abs(math.fsum(weights) - 1.0) > 1e-12:
        raise DomainError("Laguerre weights must be a probability vector")
    if np.any(np.asarray(x) < 0):
        raise DomainError("Laguerre argument must be non-negative")
    return laguerre_series(weights, x)
