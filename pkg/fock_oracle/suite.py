"""
Verification suite run by the verify command.
"""

import logging
from typing import List, Optional

from fock_oracle.defect import identity_defect
from fock_oracle.density import ORACLE_GRID_SIZE, joint_density_oracle
from fock_oracle.identities import normality_check, relative_number_checks
from fock_oracle.types import CheckResult, TruncationSpec, VerificationReport
from fock_oracle.unitary import assemble_unitary, heisenberg_deviation, unitarity_deviation
from measurement.density import outcome_density
from measurement.moments import predicted_moments
from measurement.types import GridSpec, Preparation
from network.gamma import validate_canonical_gamma
from utils.conf import get_setting
from utils.exceptions import RepresentabilityError

logger = logging.getLogger(__name__)

DEFECT_NMAX = 8


def _defect_check(gamma: float, trunc: TruncationSpec) -> CheckResult:
    if gamma == 1.0:
        return CheckResult.measure(
            'identity_defect', gamma, trunc, None, None,
            notice="gamma = 1: the identity-resolution defect vanishes; check not applicable",
        )
    result = identity_defect(gamma, n_max=min(trunc.n_max, DEFECT_NMAX))
    return CheckResult.measure('identity_defect', gamma, trunc, result.max_deviation, result.tolerance)


def _density_check(prep: Preparation, gamma: float, trunc: TruncationSpec) -> CheckResult:
    tolerance = get_setting('ZGAMMA_DENSITY_L1_TOLERANCE', 1e-2)
    grid = GridSpec.around(predicted_moments(prep, gamma).predicted, size=ORACLE_GRID_SIZE)
    try:
        oracle = joint_density_oracle(prep, gamma, grid, trunc)
    except RepresentabilityError as exc:
        return CheckResult(
            name='density_equivalence', gamma=gamma, n_max=trunc.n_max, buffer=trunc.buffer,
            max_deviation=None, tolerance=tolerance, passed=False, notice=str(exc),
        )
    reference = outcome_density(prep, gamma, grid)
    return CheckResult.measure('density_equivalence', gamma, trunc, oracle.l1_distance(reference), tolerance)


def run_verification(gamma: float, trunc: Optional[TruncationSpec] = None,
                     prep: Optional[Preparation] = None) -> VerificationReport:
    """
    Run every oracle check for one canonical gamma.

    Failing checks are recorded, never raised; the report passes only when
    no required check failed.

    Args:
        gamma: Canonical gamma in (0, 1]
        trunc: Cutoff and buffer, or None for the configured defaults
        prep: Preparation for the density comparison, or None for vacua
    """
    gamma = validate_canonical_gamma(gamma)
    trunc = trunc or TruncationSpec.default()
    prep = prep or Preparation.all_vacuum()
    operator_tolerance = get_setting('ZGAMMA_OPERATOR_TOLERANCE', 1e-8)
    unitarity_tolerance = get_setting('ZGAMMA_UNITARITY_TOLERANCE', 1e-10)

    unitary = assemble_unitary(gamma, trunc.n_max)
    checks: List[CheckResult] = [
        CheckResult.measure('heisenberg', gamma, trunc, heisenberg_deviation(unitary, gamma, trunc),
                            operator_tolerance),
        CheckResult.measure('unitarity', gamma, trunc, unitarity_deviation(unitary), unitarity_tolerance),
        normality_check(gamma, trunc),
    ]
    checks.extend(relative_number_checks(gamma, trunc).checks)
    checks.append(_defect_check(gamma, trunc))
    checks.append(_density_check(prep, gamma, trunc))
    checks.append(CheckResult(
        name='truncation_margin', gamma=gamma, n_max=trunc.n_max, buffer=trunc.buffer,
        max_deviation=None, tolerance=None, passed=trunc.margin_ok, required=False,
        notice='' if trunc.margin_ok else "n_max < 4*buffer or buffer < 2; results near the cutoff are unreliable",
    ))

    report = VerificationReport(gamma=gamma, n_max=trunc.n_max, buffer=trunc.buffer, checks=checks)
    for check in checks:
        logger.info(f"{check.name}: passed={check.passed} deviation={check.max_deviation}")
    if not report.passed:
        failed = [check.name for check in checks if check.failed]
        logger.warning(f"Verification failed for gamma={gamma}: {', '.join(failed)}")
    return report
