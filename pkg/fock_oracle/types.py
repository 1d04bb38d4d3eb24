"""
Value types of the truncated Fock-space oracle.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Union

import numpy as np
from scipy import sparse

from utils.conf import get_setting
from utils.exceptions import DomainError

MODE_CONVENTION = 'kron(mode1, mode2, mode3); index = (n1*(n_max+1) + n2)*(n_max+1) + n3'

Matrix = Union[np.ndarray, sparse.spmatrix]


@dataclass(frozen=True)
class TruncationSpec:
    """
    Per-mode Fock cutoff and safe-subspace margin.

    The safe subspace holds basis states with n1 + n2 + n3 <= n_max - buffer.
    """
    n_max: int = 12
    buffer: int = 3

    def __post_init__(self):
        if self.n_max < 1:
            raise DomainError(f"n_max must be at least 1, got {self.n_max}")
        if not 0 <= self.buffer <= self.n_max:
            raise DomainError(f"buffer must lie in [0, n_max], got {self.buffer}")

    @classmethod
    def default(cls) -> 'TruncationSpec':
        return cls(
            n_max=get_setting('ZGAMMA_ORACLE_NMAX', 12),
            buffer=get_setting('ZGAMMA_ORACLE_BUFFER', 3),
        )

    @property
    def levels(self) -> int:
        return self.n_max + 1

    @property
    def dimension(self) -> int:
        return self.levels ** 3

    @property
    def safe_cutoff(self) -> int:
        return self.n_max - self.buffer

    @property
    def margin_ok(self) -> bool:
        """Recommended margin: n_max >= 4 buffer and buffer >= 2."""
        return self.n_max >= 4 * self.buffer and self.buffer >= 2


@dataclass(frozen=True, eq=False)
class FockOperator:
    """Operator on a truncated one- or three-mode Fock space."""
    matrix: Matrix
    n_max: int
    modes: int = 3
    label: str = ''
    convention: str = MODE_CONVENTION

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def dense(self) -> np.ndarray:
        if sparse.issparse(self.matrix):
            return self.matrix.toarray()
        return np.asarray(self.matrix)


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one oracle check.

    passed is None when the check was skipped; notice then says why.
    Informational checks never fail a verification run.
    """
    name: str
    gamma: float
    n_max: int
    buffer: int
    max_deviation: Optional[float]
    tolerance: Optional[float]
    passed: Optional[bool]
    required: bool = True
    notice: str = ''

    @classmethod
    def measure(cls, name: str, gamma: float, trunc: TruncationSpec, deviation: Optional[float],
                tolerance: Optional[float], required: bool = True, notice: str = '') -> 'CheckResult':
        """Compare a deviation with its tolerance; a missing deviation means skipped."""
        passed = None if deviation is None else bool(deviation <= tolerance)
        return cls(
            name=name, gamma=gamma, n_max=trunc.n_max, buffer=trunc.buffer,
            max_deviation=deviation, tolerance=tolerance, passed=passed,
            required=required, notice=notice,
        )

    @property
    def failed(self) -> bool:
        return self.required and self.passed is False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class RelativeNumberReport:
    """Checks of [T, N] = T and of the polar phase V."""
    gamma: float
    checks: List[CheckResult] = field(default_factory=list)
    notice: str = ''

    @property
    def passed(self) -> bool:
        return not any(check.failed for check in self.checks)

    def check(self, name: str) -> CheckResult:
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(name)


@dataclass(frozen=True, eq=False)
class DefectResult:
    """Numerical identity-resolution defect and its closed form."""
    gamma: float
    n_max: int
    matrix: np.ndarray
    expected: np.ndarray
    max_deviation: float
    tolerance: float
    min_completeness: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    """All oracle checks of one verification run."""
    gamma: float
    n_max: int
    buffer: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(check.failed for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'gamma': self.gamma,
            'n_max': self.n_max,
            'buffer': self.buffer,
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
        }
