"""
Three-mode network unitary on the truncated Fock space.

U = R2 B13 B23 B12 with B_jk = exp(theta (a_j^dagger a_k - a_k^dagger a_j)) and
R2 = exp(i pi n2). This generator gives U^dagger a_k U = sum_l M_kl a_l.
The truncated U is exact on every sector n1 + n2 + n3 <= n_max.
"""

import logging
from functools import lru_cache

import numpy as np
from scipy import linalg, sparse

from fock_oracle.ladder import annihilators, basis_numbers, destroy, restrict, safe_indices
from fock_oracle.types import FockOperator, TruncationSpec
from network.gamma import validate_canonical_gamma
from network.mixing import build_mixing_matrix, decompose
from network.types import STAGE_MODES, Stage, Su2Plan
from utils.conf import get_setting
from utils.exceptions import AccuracyError

logger = logging.getLogger(__name__)


def _two_mode_ladders(n_max: int):
    a = destroy(n_max).toarray()
    identity = np.eye(n_max + 1)
    return np.kron(a, identity), np.kron(identity, a)


def beam_splitter_block(theta: float, n_max: int) -> np.ndarray:
    """exp(theta (a_j^dagger a_k - a_k^dagger a_j)) on a two-mode space ordered (j, k)."""
    a_j, a_k = _two_mode_ladders(n_max)
    generator = theta * (a_j.conj().T @ a_k - a_k.conj().T @ a_j)
    return linalg.expm(generator)


def printed_generator_block(theta: float, n_max: int) -> np.ndarray:
    """exp(-i theta (a_j a_k^dagger + a_k a_j^dagger)), the symmetric beam-splitter form."""
    a_j, a_k = _two_mode_ladders(n_max)
    generator = -1j * theta * (a_j @ a_k.conj().T + a_k @ a_j.conj().T)
    return linalg.expm(generator)


def heisenberg_coefficients(block: np.ndarray, n_max: int) -> np.ndarray:
    """
    2x2 matrix C with block^dagger a_r block = sum_s C_rs a_s on a two-mode space.

    Read off from matrix elements between |0,0> and the one-photon states.
    """
    levels = n_max + 1
    ladders = _two_mode_ladders(n_max)
    one_photon = (levels, 1)
    coefficients = np.empty((2, 2), dtype=complex)
    for r, a_r in enumerate(ladders):
        transformed = block.conj().T @ a_r @ block
        for s, index in enumerate(one_photon):
            coefficients[r, s] = transformed[0, index]
    return coefficients


def embed_two_mode(block: np.ndarray, j: int, k: int, n_max: int) -> sparse.csr_matrix:
    """Embed an operator on modes (j, k) into the three-mode space."""
    levels = n_max + 1
    (spectator,) = {1, 2, 3} - {j, k}
    full = sparse.kron(sparse.csr_matrix(block), sparse.identity(levels, format='csr'), format='csr')

    numbers = basis_numbers(n_max)
    source = (numbers[j - 1] * levels + numbers[k - 1]) * levels + numbers[spectator - 1]
    return full[source][:, source].tocsr()


def pi_rotation_stage(mode: int, n_max: int) -> sparse.csr_matrix:
    """exp(i pi n_mode) = diag((-1)^n_mode)."""
    numbers = basis_numbers(n_max)[mode - 1]
    return sparse.diags((-1.0) ** numbers, format='csr').astype(complex)


def stage_operator(plan: Su2Plan, label: str, n_max: int) -> sparse.csr_matrix:
    if label == Stage.PI_ROTATION:
        return pi_rotation_stage(plan.pi_rotation_mode, n_max)
    j, k = STAGE_MODES[label]
    return embed_two_mode(beam_splitter_block(plan.angle(label), n_max), j, k, n_max)


@lru_cache(maxsize=16)
def assemble_unitary(gamma: float, n_max: int) -> FockOperator:
    """Product of the stage operators of decompose(gamma), without accuracy checks."""
    plan = decompose(gamma)
    dimension = (n_max + 1) ** 3
    matrix = sparse.identity(dimension, dtype=complex, format='csr')
    for label in plan.ordering:
        matrix = (matrix @ stage_operator(plan, label, n_max)).tocsr()
    matrix.eliminate_zeros()
    logger.info(f"Assembled network unitary for gamma={gamma}, n_max={n_max}: nnz={matrix.nnz}")
    return FockOperator(matrix=matrix, n_max=n_max, label=f'U(gamma={gamma})')


def heisenberg_deviation(unitary: FockOperator, gamma: float, trunc: TruncationSpec) -> float:
    """max |(U^dagger a_k U - sum_l M_kl a_l)[S, S]| over k on the safe subspace S."""
    safe = safe_indices(trunc)
    mixing = build_mixing_matrix(gamma).entries
    ladders = annihilators(trunc.n_max)

    columns = sparse.csc_matrix(unitary.matrix)[:, safe]
    deviation = 0.0
    for k, a_k in enumerate(ladders):
        transformed = (columns.conj().T @ a_k @ columns).toarray()
        expected = sum(mixing[k, l] * restrict(a_l, safe) for l, a_l in enumerate(ladders))
        deviation = max(deviation, float(np.max(np.abs(transformed - expected))))
    return deviation


def unitarity_deviation(unitary: FockOperator) -> float:
    """max |U^dagger U - 1| over the whole truncated space."""
    product = (unitary.matrix.conj().T @ unitary.matrix).tocsr()
    residual = product - sparse.identity(unitary.dimension, dtype=complex, format='csr')
    if residual.nnz == 0:
        return 0.0
    return float(np.max(np.abs(residual.data)))


def build_unitary(gamma: float, trunc: TruncationSpec = None) -> FockOperator:
    """
    Truncated network unitary, checked against the mixing matrix.

    Args:
        gamma: Canonical gamma in (0, 1]
        trunc: Cutoff and buffer, or None for the configured defaults

    Returns:
        FockOperator on the (n_max + 1)^3 dimensional space

    Raises:
        AccuracyError: If the Heisenberg action deviates from M on the safe subspace
    """
    gamma = validate_canonical_gamma(gamma)
    trunc = trunc or TruncationSpec.default()
    unitary = assemble_unitary(gamma, trunc.n_max)

    tolerance = get_setting('ZGAMMA_OPERATOR_TOLERANCE', 1e-8)
    deviation = heisenberg_deviation(unitary, gamma, trunc)
    if deviation > tolerance:
        raise AccuracyError(
            f"Heisenberg action of U deviates from the mixing matrix by {deviation:.3e} "
            f"(tolerance {tolerance}) at n_max={trunc.n_max}, buffer={trunc.buffer}"
        )
    logger.debug(f"Heisenberg deviation {deviation:.3e} for gamma={gamma}")
    return unitary
