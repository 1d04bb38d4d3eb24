"""
Value types for the three-mode mixing network.

All types are immutable; matrices are stored as read-only numpy arrays.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np
from django.db import models

from utils.exceptions import DomainError


class Stage(models.TextChoices):
    """Stage labels of an SU(2) plan."""
    PI_ROTATION = 'R2', 'Pi rotation of mode 2'
    ROTATION_12 = 'B12', 'Rotation of modes 1 and 2'
    ROTATION_13 = 'B13', 'Rotation of modes 1 and 3'
    ROTATION_23 = 'B23', 'Rotation of modes 2 and 3'


# Matrix-product order reproducing the mixing matrix: M = R2 B13 B23 B12
CANONICAL_ORDERING: Tuple[str, ...] = (
    Stage.PI_ROTATION.value,
    Stage.ROTATION_13.value,
    Stage.ROTATION_23.value,
    Stage.ROTATION_12.value,
)

STAGE_MODES: Dict[str, Tuple[int, int]] = {
    Stage.ROTATION_12.value: (1, 2),
    Stage.ROTATION_13.value: (1, 3),
    Stage.ROTATION_23.value: (2, 3),
}

ANGLE_SLACK = 1e-15


@dataclass(frozen=True)
class GammaParam:
    """
    A complex amplification parameter and its canonical reduction.

    Attributes:
        raw: The parameter as given
        reduced: Canonical modulus in (0, 1]
        phase: arg(raw) in (-pi, pi]
        swapped: True when mode labels 1 and 2 were exchanged (|raw| > 1)
        scale: |raw| when swapped, else 1
    """
    raw: complex
    reduced: float
    phase: float
    swapped: bool
    scale: float

    def recover(self) -> complex:
        """Rebuild the raw parameter from the reduction record."""
        magnitude = self.scale if self.swapped else self.reduced
        return complex(magnitude * np.exp(1j * self.phase))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'raw': [self.raw.real, self.raw.imag],
            'reduced': self.reduced,
            'phase': self.phase,
            'swapped': self.swapped,
            'scale': self.scale,
        }


@dataclass(frozen=True, eq=False)
class MixingMatrix:
    """
    A 3x3 complex mode-mixing matrix.

    gamma and kappa are set for the Naimark mixing matrix and left as None
    for single two-mode blocks and plan products of other origin.
    """
    entries: np.ndarray
    gamma: Optional[float] = None
    kappa: Optional[float] = None

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex)
        if entries.shape != (3, 3):
            raise DomainError(f"Mixing matrix must be 3x3, got shape {entries.shape}")
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)

    def unitarity_deviation(self) -> float:
        """Max-entry deviation of M M^dagger from the identity."""
        product = self.entries @ self.entries.conj().T
        return float(np.max(np.abs(product - np.eye(3))))

    def deviation_from(self, other: 'MixingMatrix') -> float:
        """Max-entry difference to another matrix."""
        return float(np.max(np.abs(self.entries - other.entries)))

    def to_dict(self) -> Dict[str, Any]:
        """Serialise as {"gamma", "kappa", "entries": [[re, im] x 9]} in row-major order."""
        return {
            'gamma': self.gamma,
            'kappa': self.kappa,
            'entries': [[float(value.real), float(value.imag)] for value in self.entries.ravel()],
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> 'MixingMatrix':
        pairs = payload['entries']
        if len(pairs) != 9:
            raise DomainError(f"Expected 9 matrix entries, got {len(pairs)}")
        entries = np.array([complex(re, im) for re, im in pairs]).reshape(3, 3)
        return cls(entries=entries, gamma=payload.get('gamma'), kappa=payload.get('kappa'))


@dataclass(frozen=True)
class Su2Plan:
    """
    Factorisation of a mixing matrix into two-mode rotations and a pi rotation.

    ordering lists stage labels in matrix-product order. An empty ordering
    composes to the identity.
    """
    theta12: float = 0.0
    theta13: float = 0.0
    theta23: float = 0.0
    pi_rotation_mode: Optional[int] = None
    ordering: Tuple[str, ...] = field(default_factory=tuple)
    gamma: Optional[float] = None

    def __post_init__(self):
        for name in ('theta12', 'theta13', 'theta23'):
            value = getattr(self, name)
            if not (-ANGLE_SLACK <= value <= np.pi / 2 + ANGLE_SLACK):
                raise DomainError(f"{name} = {value} outside [0, pi/2]")
        object.__setattr__(self, 'ordering', tuple(str(label) for label in self.ordering))
        for label in self.ordering:
            if label not in Stage.values:
                raise DomainError(f"Unknown plan stage '{label}'")
        if Stage.PI_ROTATION.value in self.ordering and self.pi_rotation_mode != 2:
            raise DomainError("A pi-rotation stage requires pi_rotation_mode = 2")

    def angle(self, label: str) -> float:
        """Rotation angle of a two-mode stage."""
        modes = STAGE_MODES.get(label)
        if modes is None:
            raise DomainError(f"Stage '{label}' has no rotation angle")
        j, k = modes
        return getattr(self, f"theta{j}{k}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'gamma': self.gamma,
            'theta12': self.theta12,
            'theta13': self.theta13,
            'theta23': self.theta23,
            'pi_rotation_mode': self.pi_rotation_mode,
            'ordering': list(self.ordering),
        }
