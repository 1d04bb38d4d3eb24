"""
Single-mode state preparations and weight recipes.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np
from django.db import models

from utils.exceptions import DomainError

WEIGHT_SUM_TOLERANCE = 1e-12
UNCERTAINTY_SLACK = 1e-12


class PrepKind(models.TextChoices):
    VACUUM = 'vacuum', 'Vacuum'
    COHERENT = 'coherent', 'Coherent'
    NUMBER_DIAGONAL = 'number_diagonal', 'Number-diagonal mixture'
    GAUSSIAN = 'gaussian', 'Gaussian single-mode'


class WeightKind(models.TextChoices):
    NUMBER = 'number', 'Number state'
    THERMAL = 'thermal', 'Thermal'
    PHASE_DIAGONAL = 'phase', 'Phase-state diagonal'
    POISSON_DIAGONAL = 'poisson', 'Phase-averaged coherent'


class QuadStats(NamedTuple):
    """First and second quadrature moments under [q, p] = i."""
    mean_q: float
    mean_p: float
    var_q: float
    var_p: float
    cov_qp: float


@dataclass(frozen=True)
class StatePrep:
    """
    A single-mode preparation.

    Only the fields of the chosen kind are meaningful: alpha for coherent
    states, weights for number-diagonal mixtures and the five moments for
    Gaussian states.
    """
    kind: PrepKind
    alpha: complex = 0j
    weights: Tuple[float, ...] = ()
    mean_q: float = 0.0
    mean_p: float = 0.0
    var_q: float = 0.5
    var_p: float = 0.5
    cov_qp: float = 0.0
    label: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'kind', PrepKind(self.kind))
        object.__setattr__(self, 'alpha', complex(self.alpha))

        if self.kind == PrepKind.NUMBER_DIAGONAL:
            weights = tuple(float(value) for value in self.weights)
            if not weights:
                raise DomainError("Number-diagonal preparation needs at least one weight")
            if any(value < 0 or not math.isfinite(value) for value in weights):
                raise DomainError("Number-diagonal weights must be finite and non-negative")
            total = math.fsum(weights)
            if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
                raise DomainError(f"Number-diagonal weights sum to {total!r}, expected 1")
            object.__setattr__(self, 'weights', weights)

        if self.kind == PrepKind.GAUSSIAN:
            if self.var_q <= 0 or self.var_p <= 0:
                raise DomainError("Gaussian variances must be positive")
            determinant = self.var_q * self.var_p - self.cov_qp ** 2
            if determinant < 0.25 - UNCERTAINTY_SLACK:
                raise DomainError(
                    f"Gaussian covariance violates the uncertainty bound: det = {determinant:.6g} < 1/4"
                )

    @classmethod
    def vacuum(cls) -> 'StatePrep':
        return cls(kind=PrepKind.VACUUM, label='vacuum')

    @classmethod
    def coherent(cls, alpha: complex) -> 'StatePrep':
        alpha = complex(alpha)
        return cls(kind=PrepKind.COHERENT, alpha=alpha, label=f"coherent:{alpha.real!r},{alpha.imag!r}")

    @classmethod
    def number_diagonal(cls, weights: Sequence[float], label: str = '') -> 'StatePrep':
        weights = tuple(float(value) for value in np.asarray(weights, dtype=float).ravel())
        if not label:
            label = 'weights:' + ','.join(repr(value) for value in weights)
        return cls(kind=PrepKind.NUMBER_DIAGONAL, weights=weights, label=label)

    @classmethod
    def number(cls, m: int) -> 'StatePrep':
        """The Fock state |m><m|."""
        if m < 0:
            raise DomainError(f"Photon number must be non-negative, got {m}")
        weights = [0.0] * (m + 1)
        weights[m] = 1.0
        return cls.number_diagonal(weights, label=f"number:{m}")

    @classmethod
    def gaussian(cls, mean_q: float, mean_p: float, var_q: float, var_p: float, cov_qp: float = 0.0) -> 'StatePrep':
        return cls(
            kind=PrepKind.GAUSSIAN,
            mean_q=float(mean_q), mean_p=float(mean_p),
            var_q=float(var_q), var_p=float(var_p), cov_qp=float(cov_qp),
            label=f"gaussian:{mean_q!r},{mean_p!r},{var_q!r},{var_p!r},{cov_qp!r}",
        )

    @property
    def is_phase_insensitive(self) -> bool:
        return self.kind in (PrepKind.VACUUM, PrepKind.NUMBER_DIAGONAL)

    def __str__(self):
        return self.label or self.kind.value


@dataclass(frozen=True)
class WeightRecipe:
    """
    Recipe for number-diagonal weights.

    A cutoff of None picks the smallest cutoff whose discarded tail mass is
    below the tail bound.
    """
    kind: WeightKind
    m: int = 0
    z: complex = 0j
    alpha_sq: float = 0.0
    cutoff: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', WeightKind(self.kind))
        object.__setattr__(self, 'z', complex(self.z))
        if self.cutoff is not None and self.cutoff < 0:
            raise DomainError(f"Cutoff must be non-negative, got {self.cutoff}")
