"""
Operator identities of T = a1 + gamma a2^dagger + kappa a3^dagger.

T is normal, [T, N] = T with N = N1 - N2 - N3, and its polar phase V
(T = V |T|) lowers N by one. All checks are restricted to the safe subspace.
"""

import logging
from typing import List, Optional

import numpy as np
from scipy import linalg, sparse

from fock_oracle.ladder import annihilators, basis_numbers, restrict, safe_indices
from fock_oracle.types import CheckResult, FockOperator, RelativeNumberReport, TruncationSpec
from network.gamma import kappa_of, validate_canonical_gamma
from utils.conf import get_setting

logger = logging.getLogger(__name__)

SINGULAR_THRESHOLD = 1e-12
# Retained eigenvalues of T^dagger T below this fraction of the largest make |T| numerically singular
CONDITION_FLOOR = 1e-10


def operator_T(gamma: float, trunc: Optional[TruncationSpec] = None) -> FockOperator:
    """Truncated T = a1 + gamma a2^dagger + kappa a3^dagger."""
    gamma = validate_canonical_gamma(gamma)
    trunc = trunc or TruncationSpec.default()
    a1, a2, a3 = annihilators(trunc.n_max)
    matrix = (a1 + gamma * a2.conj().T + kappa_of(gamma) * a3.conj().T).tocsr()
    return FockOperator(matrix=matrix, n_max=trunc.n_max, label=f'T(gamma={gamma})')


def number_difference(trunc: TruncationSpec) -> sparse.csr_matrix:
    """N = N1 - N2 - N3 as a diagonal operator."""
    n1, n2, n3 = basis_numbers(trunc.n_max)
    return sparse.diags((n1 - n2 - n3).astype(float), format='csr').astype(complex)


def _result(name: str, gamma: float, trunc: TruncationSpec, deviation: Optional[float],
            tolerance: Optional[float], required: bool = True, notice: str = '') -> CheckResult:
    result = CheckResult.measure(name, gamma, trunc, deviation, tolerance, required, notice)
    if result.failed:
        logger.warning(f"Check {name} failed for gamma={gamma}: deviation {deviation:.3e} > {tolerance}")
    return result


def _safe_norm(op, safe: np.ndarray) -> float:
    return float(np.max(np.abs(restrict(op, safe))))


def normality_check(gamma: float, trunc: Optional[TruncationSpec] = None) -> CheckResult:
    """max |[T, T^dagger]| on the safe subspace."""
    gamma = validate_canonical_gamma(gamma)
    trunc = trunc or TruncationSpec.default()
    t = operator_T(gamma, trunc).matrix
    commutator = t @ t.conj().T - t.conj().T @ t
    deviation = _safe_norm(commutator, safe_indices(trunc))
    return _result('normality', gamma, trunc, deviation, get_setting('ZGAMMA_OPERATOR_TOLERANCE', 1e-8))


def _polar_parts(t: sparse.csr_matrix, trunc: TruncationSpec):
    """
    Pseudo-inverse of |T| and the projector onto its range, block by block in N.

    Eigenvalues of T^dagger T at or below SINGULAR_THRESHOLD times the largest
    are the truncation kernel and are dropped. Also returns the smallest
    retained eigenvalue relative to the largest, or 0 when nothing is retained.
    """
    n1, n2, n3 = basis_numbers(trunc.n_max)
    labels = n1 - n2 - n3
    gram = (t.conj().T @ t).tocsr()

    blocks = []
    for label in np.unique(labels):
        indices = np.flatnonzero(labels == label)
        eigenvalues, vectors = linalg.eigh(gram[indices][:, indices].toarray())
        blocks.append((indices, eigenvalues, vectors))

    largest = max(float(block[1].max()) for block in blocks)
    threshold = SINGULAR_THRESHOLD * largest

    rows, cols, inverse, projector = [], [], [], []
    smallest = np.inf
    for indices, eigenvalues, vectors in blocks:
        keep = eigenvalues > threshold
        if not keep.any():
            continue
        smallest = min(smallest, float(eigenvalues[keep].min()))
        kept = vectors[:, keep]
        row, col = np.meshgrid(indices, indices, indexing='ij')
        rows.append(row.ravel())
        cols.append(col.ravel())
        inverse.append(((kept / np.sqrt(eigenvalues[keep])) @ kept.conj().T).ravel())
        projector.append((kept @ kept.conj().T).ravel())

    shape = (trunc.dimension, trunc.dimension)
    if not rows:
        empty = sparse.csr_matrix(shape, dtype=complex)
        return empty, empty, 0.0
    rows, cols = np.concatenate(rows), np.concatenate(cols)
    return (
        sparse.csr_matrix((np.concatenate(inverse), (rows, cols)), shape=shape),
        sparse.csr_matrix((np.concatenate(projector), (rows, cols)), shape=shape),
        smallest / largest,
    )


def relative_number_checks(gamma: float, trunc: Optional[TruncationSpec] = None,
                           condition_floor: float = CONDITION_FLOOR) -> RelativeNumberReport:
    """
    Check [T, N] = T and the polar phase V = T |T|^+.

    V must be an isometry on the range of |T| and satisfy VN - NV = V. The
    residual of C^2 + S^2 = 1 with C = (V + V^dagger)/2, S = (V - V^dagger)/2i
    is reported for information only.

    When |T| is numerically singular (a retained eigenvalue of T^dagger T below
    condition_floor times the largest) the polar checks are skipped with a notice.
    """
    gamma = validate_canonical_gamma(gamma)
    trunc = trunc or TruncationSpec.default()
    safe = safe_indices(trunc)
    operator_tolerance = get_setting('ZGAMMA_OPERATOR_TOLERANCE', 1e-8)
    polar_tolerance = get_setting('ZGAMMA_POLAR_TOLERANCE', 1e-6)

    t = operator_T(gamma, trunc).matrix
    number = number_difference(trunc)
    checks: List[CheckResult] = [
        _result('commutator_T_N', gamma, trunc, _safe_norm(t @ number - number @ t - t, safe), operator_tolerance),
    ]

    inverse, projector, conditioning = _polar_parts(t, trunc)
    notice = ''
    if projector.nnz == 0:
        notice = "T vanishes on the truncated space; polar phase checks skipped"
    elif conditioning < condition_floor:
        notice = (
            f"|T| is numerically singular: smallest retained eigenvalue of T^dagger T is "
            f"{conditioning:.3e} of the largest, below {condition_floor:.1e}; polar phase checks skipped"
        )
    if notice:
        logger.warning(notice)
        for name in ('polar_isometry', 'polar_phase_commutator'):
            checks.append(_result(name, gamma, trunc, None, polar_tolerance, notice=notice))
        checks.append(_result(
            'polar_trig_identity', gamma, trunc, None, polar_tolerance, required=False, notice=notice,
        ))
        return RelativeNumberReport(gamma=gamma, checks=checks, notice=notice)

    phase = (t @ inverse).tocsr()
    adjoint = phase.conj().T
    checks.append(_result(
        'polar_isometry', gamma, trunc, _safe_norm(adjoint @ phase - projector, safe), polar_tolerance,
    ))
    checks.append(_result(
        'polar_phase_commutator', gamma, trunc,
        _safe_norm(phase @ number - number @ phase - phase, safe), polar_tolerance,
    ))

    cosine = 0.5 * (phase + adjoint)
    sine = (phase - adjoint) / 2j
    identity = sparse.identity(trunc.dimension, dtype=complex, format='csr')
    checks.append(_result(
        'polar_trig_identity', gamma, trunc,
        _safe_norm(cosine @ cosine + sine @ sine - identity, safe), polar_tolerance,
        required=False, notice="C^2 + S^2 - 1 is informational",
    ))
    return RelativeNumberReport(gamma=gamma, checks=checks)
