"""
Value types of the heterodyne application.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, Tuple

import numpy as np

from measurement.types import MomentReport
from utils.exceptions import DomainError

IDENTICAL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class HeterodyneSpec:
    """Signal frequency omega_1 and intermediate frequency omega_I, in the same units."""
    omega_signal: float
    omega_intermediate: float = 0.0

    def __post_init__(self):
        if not self.omega_signal > 0:
            raise DomainError(f"omega_signal must be positive, got {self.omega_signal}")
        if not 0 <= self.omega_intermediate < self.omega_signal:
            raise DomainError(
                f"omega_intermediate must lie in [0, omega_signal), got {self.omega_intermediate} "
                f"with omega_signal={self.omega_signal}"
            )

    @property
    def ratio(self) -> float:
        return self.omega_intermediate / self.omega_signal

    def to_dict(self) -> Dict[str, float]:
        return {'omega_signal': self.omega_signal, 'omega_intermediate': self.omega_intermediate}


@dataclass(frozen=True)
class BranchBudget:
    """Predicted moments of one gamma with the noise added by the ancilla."""
    gamma: float
    report: MomentReport

    @property
    def added_q(self) -> float:
        return self.report.predicted.var_q1 - self.report.intrinsic.var_x

    @property
    def added_p(self) -> float:
        return self.report.predicted.var_p2 - self.report.intrinsic.var_y

    def to_dict(self) -> Dict[str, Any]:
        return {
            'gamma': self.gamma,
            'added_noise_q': self.added_q,
            'added_noise_p': self.added_p,
            'moments': self.report.to_dict(),
        }


@dataclass(frozen=True)
class NoiseBudget:
    """
    Caves branch (gamma_C) against standard heterodyne (gamma = 1) at equal inputs.

    added_excess_* is the ancilla noise of the Caves branch over the standard
    one, kappa^2 dq3^2 / 2. gap_* is the difference of the measured variances,
    zero when rho2 and sigma are both vacuum.
    """
    spec: HeterodyneSpec
    gamma_c: float
    commutator: float
    scale: float
    caves: BranchBudget
    standard: BranchBudget

    @property
    def added_excess_q(self) -> float:
        return self.caves.added_q - self.standard.added_q

    @property
    def added_excess_p(self) -> float:
        return self.caves.added_p - self.standard.added_p

    @property
    def gap_q(self) -> float:
        return self.caves.report.predicted.var_q1 - self.standard.report.predicted.var_q1

    @property
    def gap_p(self) -> float:
        return self.caves.report.predicted.var_p2 - self.standard.report.predicted.var_p2

    @property
    def identical(self) -> bool:
        caves = self.caves.report.predicted.to_dict()
        standard = self.standard.report.predicted.to_dict()
        return all(abs(caves[key] - standard[key]) <= IDENTICAL_TOLERANCE for key in caves)

    @property
    def verdict(self) -> str:
        if self.identical:
            return "no added noise vs standard"
        if self.gap_q >= 0 and self.gap_p >= 0:
            return f"added noise vs standard: {self.gap_q:.6g} (Q1), {self.gap_p:.6g} (P2)"
        return f"statistics differ from standard: {self.gap_q:.6g} (Q1), {self.gap_p:.6g} (P2)"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'spec': self.spec.to_dict(),
            'gamma_c': self.gamma_c,
            'commutator': self.commutator,
            'scale': self.scale,
            'caves': self.caves.to_dict(),
            'standard': self.standard.to_dict(),
            'added_excess_q': self.added_excess_q,
            'added_excess_p': self.added_excess_p,
            'excess_vs_standard_q': self.gap_q,
            'excess_vs_standard_p': self.gap_p,
            'identical': self.identical,
            'verdict': self.verdict,
        }


@dataclass(frozen=True, eq=False)
class PhaseReport:
    """Binned distribution of arg(tau) with circular statistics."""
    gamma: float
    theta: np.ndarray
    probability: np.ndarray
    circular_mean: float
    circular_variance: float

    @property
    def n_bins(self) -> int:
        return self.theta.size

    def rows(self) -> Iterator[Tuple[float, float]]:
        for theta, probability in zip(self.theta, self.probability):
            yield float(theta), float(probability)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'gamma': self.gamma,
            'n_bins': self.n_bins,
            'circular_mean': self.circular_mean,
            'circular_variance': self.circular_variance,
        }
