"""
Noise budget of Caves heterodyne against standard heterodyne.
"""

import logging

from heterodyne.caves import caves_commutator, caves_gamma, caves_scale
from heterodyne.types import BranchBudget, HeterodyneSpec, NoiseBudget
from measurement.moments import predicted_moments
from measurement.types import Preparation

logger = logging.getLogger(__name__)


def noise_budget(spec: HeterodyneSpec, prep: Preparation) -> NoiseBudget:
    """
    Compare predicted moments at gamma_C and at gamma = 1 for the same inputs.

    With rho2 = sigma = vacuum both branches give the same statistics.

    Args:
        spec: Heterodyne frequencies
        prep: Product preparation shared by both branches

    Returns:
        NoiseBudget with added noise per quadrature and a verdict
    """
    gamma_c = caves_gamma(spec)
    budget = NoiseBudget(
        spec=spec,
        gamma_c=gamma_c,
        commutator=caves_commutator(spec),
        scale=caves_scale(spec),
        caves=BranchBudget(gamma=gamma_c, report=predicted_moments(prep, gamma_c)),
        standard=BranchBudget(gamma=1.0, report=predicted_moments(prep, 1.0)),
    )
    logger.info(f"Noise budget at gamma_C={gamma_c:.12g}: {budget.verdict}")
    return budget
