"""
Ladder operators and basis bookkeeping on the truncated Fock space.

Single-mode operators live on n = 0..n_max. Three-mode operators use
kron(mode1, mode2, mode3), so index = (n1*L + n2)*L + n3 with L = n_max + 1.
"""

from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy import sparse

from fock_oracle.types import TruncationSpec


@lru_cache(maxsize=32)
def destroy(n_max: int) -> sparse.csr_matrix:
    """Truncated annihilation operator; [a, a^dagger] = 1 except at the cutoff row."""
    return sparse.diags(np.sqrt(np.arange(1, n_max + 1, dtype=float)), 1, format='csr').astype(complex)


def embed(op: sparse.spmatrix, mode: int, n_max: int) -> sparse.csr_matrix:
    """Place a single-mode operator on mode 1, 2 or 3."""
    identity = sparse.identity(n_max + 1, dtype=complex, format='csr')
    factors = [identity, identity, identity]
    factors[mode - 1] = sparse.csr_matrix(op)
    return sparse.kron(sparse.kron(factors[0], factors[1], format='csr'), factors[2], format='csr')


@lru_cache(maxsize=32)
def annihilators(n_max: int) -> Tuple[sparse.csr_matrix, sparse.csr_matrix, sparse.csr_matrix]:
    """(a1, a2, a3) on the three-mode space."""
    a = destroy(n_max)
    return embed(a, 1, n_max), embed(a, 2, n_max), embed(a, 3, n_max)


@lru_cache(maxsize=32)
def basis_numbers(n_max: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Photon numbers (n1, n2, n3) of every three-mode basis index."""
    levels = n_max + 1
    n1, n2, n3 = np.indices((levels, levels, levels)).reshape(3, -1)
    return n1, n2, n3


def total_photons(n_max: int) -> np.ndarray:
    n1, n2, n3 = basis_numbers(n_max)
    return n1 + n2 + n3


def safe_indices(trunc: TruncationSpec) -> np.ndarray:
    """Basis indices with n1 + n2 + n3 <= n_max - buffer."""
    return np.flatnonzero(total_photons(trunc.n_max) <= trunc.safe_cutoff)


def sector_indices(trunc: TruncationSpec) -> np.ndarray:
    """Basis indices with n1 + n2 + n3 <= n_max, where the truncated unitary is exact."""
    return np.flatnonzero(total_photons(trunc.n_max) <= trunc.n_max)


def restrict(op: sparse.spmatrix, indices: np.ndarray) -> np.ndarray:
    """Dense submatrix op[indices, indices]."""
    return sparse.csr_matrix(op)[indices][:, indices].toarray()
