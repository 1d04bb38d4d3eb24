"""
Outcome moment-generating function of the Z-gamma measurement.

Xi(lambda) = Tr[rho (x) sigma exp(lambda T^dagger - lambda* T)] with
T = a1 + gamma a2^dagger + kappa a3^dagger factorises into

    Xi(lambda) = chi1(lambda) chi2(-gamma lambda*) chi3(-kappa lambda*)

where the conjugated arguments come from the creation operators in T.
"""

from typing import Union

import numpy as np

from measurement.types import Preparation
from network.gamma import kappa_of, validate_canonical_gamma
from states.functions import char_fn

ComplexLike = Union[complex, np.ndarray]


def moment_generating_fn(prep: Preparation, gamma: float, lam: ComplexLike) -> ComplexLike:
    """
    Evaluate Xi(lambda) for a product preparation.

    Args:
        prep: Preparation of modes a1, a2, a3
        gamma: Canonical gamma in (0, 1]
        lam: Complex scalar or array

    Raises:
        DomainError: If gamma lies outside (0, 1]
    """
    gamma = validate_canonical_gamma(gamma)
    kappa = kappa_of(gamma)

    lam_arr = np.asarray(lam, dtype=complex)
    reflected = -np.conj(lam_arr)
    value = (char_fn(prep.rho1, lam_arr)
             * char_fn(prep.rho2, gamma * reflected)
             * char_fn(prep.sigma, kappa * reflected))

    if np.ndim(lam) == 0:
        return complex(value)
    return value
