"""
Value types for outcome statistics.

Outcomes are tau = Q1 + i P2. Density arrays are indexed [ix, iy].
"""

import math
from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, Iterator, Optional, Tuple

import numpy as np
from scipy.integrate import trapezoid

from states.functions import quad_stats
from states.types import StatePrep
from utils.conf import get_setting
from utils.exceptions import DomainError, NaimarkConstraintError

NAIMARK_MEAN_TOLERANCE = 1e-12


def _is_power_of_two(value: int) -> bool:
    return value >= 2 and (value & (value - 1)) == 0


@dataclass(frozen=True)
class Preparation:
    """Product input rho1 (x) rho2 (x) sigma on modes a1, a2, a3."""
    rho1: StatePrep
    rho2: StatePrep
    sigma: StatePrep

    def __post_init__(self):
        stats = quad_stats(self.sigma)
        if abs(stats.mean_q) > NAIMARK_MEAN_TOLERANCE or abs(stats.mean_p) > NAIMARK_MEAN_TOLERANCE:
            raise NaimarkConstraintError(
                f"Ancilla preparation {self.sigma} has mean ({stats.mean_q:.3g}, {stats.mean_p:.3g}); "
                "the measurement needs <a3> = 0"
            )

    @classmethod
    def all_vacuum(cls) -> 'Preparation':
        return cls(StatePrep.vacuum(), StatePrep.vacuum(), StatePrep.vacuum())

    @property
    def modes(self) -> Tuple[StatePrep, StatePrep, StatePrep]:
        return self.rho1, self.rho2, self.sigma

    def to_dict(self) -> Dict[str, str]:
        return {'rho1': str(self.rho1), 'rho2': str(self.rho2), 'sigma': str(self.sigma)}


@dataclass(frozen=True)
class QuadratureMoments:
    """Means, variances and covariance of (Q1, P2)."""
    mean_q1: float
    mean_p2: float
    var_q1: float
    var_p2: float
    cov: float

    @property
    def mean(self) -> complex:
        return complex(self.mean_q1, self.mean_p2)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class IntrinsicMoments:
    """Second moments of X_gamma, Y_gamma before the ancilla noise is added."""
    var_x: float
    var_y: float
    cov_xy: float
    commutator: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class MomentReport:
    """
    Predicted and/or measured moments of one measurement setting.

    predicted carries the analytic values, measured the values integrated
    from a density grid or sample set.
    """
    gamma: Optional[float] = None
    predicted: Optional[QuadratureMoments] = None
    measured: Optional[QuadratureMoments] = None
    intrinsic: Optional[IntrinsicMoments] = None
    mass: Optional[float] = None

    def combined_with(self, other: 'MomentReport') -> 'MomentReport':
        """Fill empty blocks from another report."""
        return replace(
            self,
            gamma=self.gamma if self.gamma is not None else other.gamma,
            predicted=self.predicted or other.predicted,
            measured=self.measured or other.measured,
            intrinsic=self.intrinsic or other.intrinsic,
            mass=self.mass if self.mass is not None else other.mass,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'gamma': self.gamma,
            'mass': self.mass,
            'predicted': self.predicted.to_dict() if self.predicted else None,
            'measured': self.measured.to_dict() if self.measured else None,
            'intrinsic': self.intrinsic.to_dict() if self.intrinsic else None,
        }


@dataclass(frozen=True)
class GridSpec:
    """Rectangular outcome grid; axes include both end points."""
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int = 256
    ny: int = 256

    def __post_init__(self):
        if not (_is_power_of_two(self.nx) and _is_power_of_two(self.ny)):
            raise DomainError(f"Grid sizes must be powers of two, got {self.nx}x{self.ny}")
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise DomainError(f"Grid bounds are empty: {self.bounds}")

    @classmethod
    def around(cls, moments: QuadratureMoments, sigmas: Optional[float] = None,
               size: Optional[int] = None) -> 'GridSpec':
        """Grid spanning mean +/- sigmas standard deviations per coordinate."""
        sigmas = sigmas if sigmas is not None else get_setting('ZGAMMA_GRID_SIGMAS', 6.0)
        size = size if size is not None else get_setting('ZGAMMA_GRID_SIZE', 256)
        half_x = sigmas * math.sqrt(moments.var_q1)
        half_y = sigmas * math.sqrt(moments.var_p2)
        return cls(
            x_min=moments.mean_q1 - half_x, x_max=moments.mean_q1 + half_x,
            y_min=moments.mean_p2 - half_y, y_max=moments.mean_p2 + half_y,
            nx=size, ny=size,
        )

    @property
    def bounds(self) -> Tuple[float, float, float, float]:
        return self.x_min, self.x_max, self.y_min, self.y_max

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.nx)

    @property
    def y(self) -> np.ndarray:
        return np.linspace(self.y_min, self.y_max, self.ny)

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.nx - 1)

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / (self.ny - 1)

    def points(self) -> np.ndarray:
        """Complex outcome values tau at every node, shape (nx, ny)."""
        return self.x[:, None] + 1j * self.y[None, :]

    def covers(self, moments: QuadratureMoments, sigmas: float) -> bool:
        """True when mean +/- sigmas standard deviations lies inside the grid."""
        half_x = sigmas * math.sqrt(moments.var_q1)
        half_y = sigmas * math.sqrt(moments.var_p2)
        return (self.x_min <= moments.mean_q1 - half_x and moments.mean_q1 + half_x <= self.x_max
                and self.y_min <= moments.mean_p2 - half_y and moments.mean_p2 + half_y <= self.y_max)

    def including_origin(self) -> 'GridSpec':
        """Extend the bounds so that tau = 0 lies inside."""
        return replace(
            self,
            x_min=min(self.x_min, 0.0), x_max=max(self.x_max, 0.0),
            y_min=min(self.y_min, 0.0), y_max=max(self.y_max, 0.0),
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True, eq=False)
class OutcomeGrid:
    """
    Sampled probability density of outcomes over a GridSpec.

    raw_minimum is the smallest value before negative ringing was clamped
    to zero; imag_residue the largest discarded imaginary part.
    """
    spec: GridSpec
    density: np.ndarray
    raw_minimum: float = 0.0
    imag_residue: float = 0.0
    source: str = 'fft'

    def __post_init__(self):
        density = np.array(self.density, dtype=float)
        if density.shape != (self.spec.nx, self.spec.ny):
            raise DomainError(f"Density shape {density.shape} does not match grid {self.spec.nx}x{self.spec.ny}")
        density.setflags(write=False)
        object.__setattr__(self, 'density', density)

    x_min = property(lambda self: self.spec.x_min)
    x_max = property(lambda self: self.spec.x_max)
    y_min = property(lambda self: self.spec.y_min)
    y_max = property(lambda self: self.spec.y_max)
    nx = property(lambda self: self.spec.nx)
    ny = property(lambda self: self.spec.ny)

    @property
    def x(self) -> np.ndarray:
        return self.spec.x

    @property
    def y(self) -> np.ndarray:
        return self.spec.y

    def integrate(self, values: np.ndarray) -> float:
        """2-D trapezoid integral of values (same shape as the density)."""
        return float(trapezoid(trapezoid(values, self.y, axis=1), self.x))

    def mass(self) -> float:
        return self.integrate(self.density)

    def l1_distance(self, other: 'OutcomeGrid') -> float:
        """Riemann-sum L1 distance to a density on the same grid."""
        if other.spec != self.spec:
            raise DomainError("L1 distance needs densities on the same grid")
        return float(np.sum(np.abs(self.density - other.density)) * self.spec.dx * self.spec.dy)

    def rows(self) -> Iterator[Tuple[float, float, float]]:
        """(x, y, density) rows, x-major."""
        x, y = self.x, self.y
        for ix in range(self.nx):
            for iy in range(self.ny):
                yield x[ix], y[iy], self.density[ix, iy]

    def header(self) -> Dict[str, Any]:
        return {
            'bounds': list(self.spec.bounds),
            'nx': self.nx,
            'ny': self.ny,
            'mass': self.mass(),
            'raw_minimum': self.raw_minimum,
            'imag_residue': self.imag_residue,
            'source': self.source,
        }


@dataclass(frozen=True)
class NoiseExcessReport:
    """Added noise of the joint measurement relative to the intrinsic quadratures."""
    gamma: float
    kappa: float
    intrinsic_var_x: float
    intrinsic_var_y: float
    var_q1: float
    var_p2: float
    excess_q: float
    excess_p: float
    expected_excess_q: float
    expected_excess_p: float
    uncertainty_product: float
    lower_bound: float
    intrinsic_product: float
    intrinsic_bound: float
    measured: bool
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
