"""
Joint outcome density computed independently in the truncated Fock space.

rho_out = U (rho1 x rho2 x sigma) U^dagger is reduced to modes 1 and 2 and
K(x, y) = <x|_1 <y|_2 rho_12 |x>_1 |y>_2 is evaluated with position
eigenfunctions on mode 1 and momentum eigenfunctions on mode 2.
"""

import logging
import math
from typing import Optional

import numpy as np

from fock_oracle.displacement import fock_density_matrix
from fock_oracle.ladder import basis_numbers, sector_indices
from fock_oracle.types import TruncationSpec
from fock_oracle.unitary import build_unitary
from measurement.moments import predicted_moments
from measurement.types import GridSpec, OutcomeGrid, Preparation
from network.gamma import validate_canonical_gamma
from utils.conf import get_setting
from utils.exceptions import RepresentabilityError

logger = logging.getLogger(__name__)

ORACLE_GRID_SIZE = 64
MODE_NAMES = ('rho1', 'rho2', 'sigma')


def hermite_functions(n_max: int, x: np.ndarray) -> np.ndarray:
    """
    Normalised Hermite functions psi_n(x) = <x|n>, shape (len(x), n_max + 1).

    Built by the stable three-term recurrence.
    """
    x = np.asarray(x, dtype=float)
    values = np.empty((x.size, n_max + 1))
    values[:, 0] = math.pi ** -0.25 * np.exp(-0.5 * x ** 2)
    if n_max >= 1:
        values[:, 1] = math.sqrt(2.0) * x * values[:, 0]
    for n in range(1, n_max):
        values[:, n + 1] = (
            math.sqrt(2.0 / (n + 1)) * x * values[:, n] - math.sqrt(n / (n + 1)) * values[:, n - 1]
        )
    return values


def momentum_functions(n_max: int, p: np.ndarray) -> np.ndarray:
    """<p|n> = (-i)^n psi_n(p)."""
    return hermite_functions(n_max, p) * (-1j) ** np.arange(n_max + 1)


def check_representability(prep: Preparation, trunc: TruncationSpec):
    """
    Truncated single-mode density matrices of a preparation.

    Raises:
        RepresentabilityError: If a mode or the joint total-photon distribution
            leaves more than ZGAMMA_ORACLE_TAIL outside the truncation
    """
    bound = get_setting('ZGAMMA_ORACLE_TAIL', 1e-6)
    matrices = []
    for name, mode in zip(MODE_NAMES, prep.modes):
        rho = fock_density_matrix(mode, trunc.n_max)
        tail = 1.0 - float(np.trace(rho).real)
        if tail > bound:
            raise RepresentabilityError(
                f"{name} = {mode} leaves {tail:.3e} of its population above n_max={trunc.n_max}",
                prep_name=name,
            )
        matrices.append(rho)

    total = np.array([1.0])
    for rho in matrices:
        total = np.convolve(total, np.clip(np.diag(rho).real, 0.0, None))
    joint_tail = 1.0 - float(total[:trunc.n_max + 1].sum())
    if joint_tail > bound:
        raise RepresentabilityError(
            f"The product state leaves {joint_tail:.3e} of its population above "
            f"n1 + n2 + n3 = {trunc.n_max}",
            prep_name='product',
        )
    return matrices


def joint_density_oracle(prep: Preparation, gamma: float, grid: Optional[GridSpec] = None,
                         trunc: Optional[TruncationSpec] = None) -> OutcomeGrid:
    """
    Outcome density K on a grid, from the truncated three-mode state.

    Args:
        prep: Product preparation
        gamma: Canonical gamma in (0, 1]
        grid: Grid spec, or None for a 64x64 automatic grid
        trunc: Cutoff and buffer, or None for the configured defaults

    Returns:
        OutcomeGrid with source 'fock-oracle'

    Raises:
        RepresentabilityError: If the preparation does not fit the truncation
        AccuracyError: If the truncated unitary fails its Heisenberg check
    """
    gamma = validate_canonical_gamma(gamma)
    trunc = trunc or TruncationSpec.default()
    if grid is None:
        grid = GridSpec.around(predicted_moments(prep, gamma).predicted, size=ORACLE_GRID_SIZE)

    first, second, ancilla = check_representability(prep, trunc)
    levels = trunc.levels

    sector = sector_indices(trunc)
    n1, n2, n3 = (numbers[sector] for numbers in basis_numbers(trunc.n_max))
    rho_in = (
        first[np.ix_(n1, n1)] * second[np.ix_(n2, n2)] * ancilla[np.ix_(n3, n3)]
    )

    unitary = build_unitary(gamma, trunc).matrix[sector][:, sector].toarray()
    rho_out = unitary @ rho_in @ unitary.conj().T

    rows, cols = np.nonzero(n3[:, None] == n3[None, :])
    reduced = np.zeros((levels, levels, levels, levels), dtype=complex)
    np.add.at(reduced, (n1[rows], n2[rows], n1[cols], n2[cols]), rho_out[rows, cols])

    position = hermite_functions(trunc.n_max, grid.x)
    momentum = momentum_functions(trunc.n_max, grid.y)
    partial = np.einsum('xa,abcd,xc->xbd', position, reduced, position)
    values = np.einsum('yb,xbd,yd->xy', momentum, partial, momentum.conj())

    residue = float(np.max(np.abs(values.imag)))
    density = values.real
    logger.info(
        f"Fock oracle density for gamma={gamma} at n_max={trunc.n_max}: "
        f"min {density.min():.3e}, imaginary residue {residue:.3e}"
    )
    return OutcomeGrid(
        spec=grid,
        density=np.clip(density, 0.0, None),
        raw_minimum=float(density.min()),
        imag_residue=residue,
        source='fock-oracle',
    )
