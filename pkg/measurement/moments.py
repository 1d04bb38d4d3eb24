"""
Predicted and measured moments of (Q1, P2), and the added-noise check.

With X = (q1 + gamma q2)/sqrt2 and Y = (p1 - gamma p2)/sqrt2:

    var Q1 = var X + kappa^2 var(q3) / 2
    var P2 = var Y + kappa^2 var(p3) / 2
    cov    = (c1 - gamma^2 c2) / 2 - kappa^2 c3 / 2
"""

import logging
import math
from typing import Optional

import numpy as np

from measurement.types import (
    IntrinsicMoments,
    MomentReport,
    NoiseExcessReport,
    OutcomeGrid,
    Preparation,
    QuadratureMoments,
)
from network.gamma import kappa_of, validate_canonical_gamma
from states.functions import quad_stats
from utils.conf import get_setting
from utils.exceptions import CoverageError, NumericalError

logger = logging.getLogger(__name__)

MEASURED_EXCESS_TOLERANCE = 1e-3


def predicted_moments(prep: Preparation, gamma: float) -> MomentReport:
    """
    Analytic moments of the outcome tau = Q1 + i P2.

    Args:
        prep: Product preparation
        gamma: Canonical gamma in (0, 1]

    Returns:
        MomentReport with predicted and intrinsic blocks
    """
    gamma = validate_canonical_gamma(gamma)
    kappa = kappa_of(gamma)
    first, second, ancilla = (quad_stats(mode) for mode in prep.modes)
    root = math.sqrt(2.0)

    var_x = 0.5 * (first.var_q + gamma ** 2 * second.var_q)
    var_y = 0.5 * (first.var_p + gamma ** 2 * second.var_p)
    cov_xy = 0.5 * (first.cov_qp - gamma ** 2 * second.cov_qp)

    predicted = QuadratureMoments(
        mean_q1=(first.mean_q + gamma * second.mean_q) / root,
        mean_p2=(first.mean_p - gamma * second.mean_p) / root,
        var_q1=var_x + 0.5 * kappa ** 2 * ancilla.var_q,
        var_p2=var_y + 0.5 * kappa ** 2 * ancilla.var_p,
        cov=cov_xy - 0.5 * kappa ** 2 * ancilla.cov_qp,
    )
    intrinsic = IntrinsicMoments(var_x=var_x, var_y=var_y, cov_xy=cov_xy, commutator=0.5 * kappa ** 2)
    return MomentReport(gamma=gamma, predicted=predicted, intrinsic=intrinsic)


def empirical_moments(grid: OutcomeGrid) -> MomentReport:
    """
    Integrate moments of a density grid with the 2-D trapezoid rule.

    Raises:
        CoverageError: If the grid mass is outside 1 +/- tolerance
        NumericalError: If the density holds NaN or infinite values
    """
    tolerance = get_setting('ZGAMMA_MASS_TOLERANCE', 1e-3)
    mass = grid.mass()
    if not np.isfinite(mass):
        raise NumericalError(f"Outcome grid mass is {mass}; the density holds non-finite values")
    if not abs(mass - 1.0) <= tolerance:
        raise CoverageError(f"Outcome grid mass {mass:.6f} is outside 1 +/- {tolerance}")

    tau = grid.spec.points()
    x, y = tau.real, tau.imag
    density = grid.density / mass
    mean_x = grid.integrate(x * density)
    mean_y = grid.integrate(y * density)
    measured = QuadratureMoments(
        mean_q1=mean_x,
        mean_p2=mean_y,
        var_q1=grid.integrate((x - mean_x) ** 2 * density),
        var_p2=grid.integrate((y - mean_y) ** 2 * density),
        cov=grid.integrate((x - mean_x) * (y - mean_y) * density),
    )
    logger.debug(f"Empirical moments {measured} from grid of mass {mass:.9f}")
    return MomentReport(measured=measured, mass=mass)


def sample_moments(samples: np.ndarray) -> QuadratureMoments:
    """Moments of a set of complex outcome samples."""
    x = np.real(samples)
    y = np.imag(samples)
    return QuadratureMoments(
        mean_q1=float(np.mean(x)),
        mean_p2=float(np.mean(y)),
        var_q1=float(np.var(x)),
        var_p2=float(np.var(y)),
        cov=float(np.mean((x - x.mean()) * (y - y.mean()))),
    )


def noise_excess_check(prep: Preparation, gamma: float, outcome: Optional[OutcomeGrid] = None) -> NoiseExcessReport:
    """
    Compare measured quadrature noise with the intrinsic noise of X and Y.

    The excess var Q1 - var X must equal kappa^2 var(q3)/2, strictly
    positive for gamma < 1. The joint measurement obeys
    var Q1 * var P2 >= kappa^4/4, while var X * var Y >= kappa^4/16.

    Args:
        prep: Product preparation
        gamma: Canonical gamma in (0, 1]
        outcome: Optional density grid; when given its integrated variances are used

    Returns:
        NoiseExcessReport
    """
    report = predicted_moments(prep, gamma)
    kappa = kappa_of(report.gamma)
    ancilla = quad_stats(prep.sigma)
    intrinsic = report.intrinsic

    if outcome is not None:
        moments = empirical_moments(outcome).measured
        tolerance = MEASURED_EXCESS_TOLERANCE
    else:
        moments = report.predicted
        tolerance = 1e-12

    excess_q = moments.var_q1 - intrinsic.var_x
    excess_p = moments.var_p2 - intrinsic.var_y
    expected_q = 0.5 * kappa ** 2 * ancilla.var_q
    expected_p = 0.5 * kappa ** 2 * ancilla.var_p

    product = moments.var_q1 * moments.var_p2
    lower_bound = kappa ** 4 / 4.0
    intrinsic_product = intrinsic.var_x * intrinsic.var_y

    passed = (abs(excess_q - expected_q) <= tolerance and abs(excess_p - expected_p) <= tolerance
              and product >= lower_bound - tolerance)
    if kappa > 0:
        passed = passed and excess_q > 0 and excess_p > 0

    logger.info(f"Noise excess at gamma={report.gamma}: ({excess_q:.6g}, {excess_p:.6g}), passed={passed}")
    return NoiseExcessReport(
        gamma=report.gamma,
        kappa=kappa,
        intrinsic_var_x=intrinsic.var_x,
        intrinsic_var_y=intrinsic.var_y,
        var_q1=moments.var_q1,
        var_p2=moments.var_p2,
        excess_q=excess_q,
        excess_p=excess_p,
        expected_excess_q=expected_q,
        expected_excess_p=expected_p,
        uncertainty_product=product,
        lower_bound=lower_bound,
        intrinsic_product=intrinsic_product,
        intrinsic_bound=kappa ** 4 / 16.0,
        measured=outcome is not None,
        passed=bool(passed),
    )
