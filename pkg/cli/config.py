"""
Run configuration for the management commands.

A run config is a flat key = value text file; '#' starts a comment and blank
lines are ignored. Command-line options override file values. Values use the
same syntax in both places:

    gamma = 0.3+0.4j
    rho1 = coherent:1.5,-0.5
    rho2 = vacuum
    sigma = thermal:0.4
    grid = auto                      # or xmin,xmax,ymin,ymax[,nx,ny]
    samples = 100000
    seed = 7
    out = runs/coherent
    nmax = 12
    buffer = 3
    omega1 = 11
    omega_i = 1
    bins = 360
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from fock_oracle.types import TruncationSpec
from heterodyne.types import HeterodyneSpec
from measurement.types import GridSpec, Preparation
from states.parsing import parse_prep
from states.types import StatePrep
from utils.conf import get_setting
from utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

KNOWN_KEYS = (
    'gamma', 'rho1', 'rho2', 'sigma', 'grid', 'samples', 'seed', 'out',
    'nmax', 'buffer', 'omega1', 'omega_i', 'bins',
)


def read_config_file(path) -> Dict[str, str]:
    """
    Read raw key/value pairs from a run-config file.

    Raises:
        ConfigurationError: If the file is missing, a line is malformed or a key is unknown
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise ConfigurationError(f"Cannot read run config {path}: {exc}")

    values: Dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split('#', 1)[0].strip()
        if not content:
            continue
        key, separator, value = content.partition('=')
        key = key.strip().lower()
        if not separator or not key:
            raise ConfigurationError(f"{path}:{number}: expected 'key = value', got '{line.strip()}'")
        if key not in KNOWN_KEYS:
            raise ConfigurationError(f"{path}:{number}: unknown key '{key}'")
        values[key] = value.strip()
    return values


def parse_gamma(text: str) -> complex:
    """Parse a complex gamma such as 0.6, -1.2, 2j or 0.3+0.4j."""
    try:
        return complex(text.strip().replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise ConfigurationError(f"Could not parse gamma '{text}'")


def parse_grid(text: str) -> Optional[GridSpec]:
    """
    Parse 'auto' or 'xmin,xmax,ymin,ymax[,nx,ny]'.

    Returns:
        None for the automatic grid
    """
    text = text.strip()
    if text.lower() == 'auto':
        return None
    parts = [part.strip() for part in text.split(',')]
    if len(parts) not in (4, 6):
        raise ConfigurationError(f"Grid must be 'auto' or 'xmin,xmax,ymin,ymax[,nx,ny]', got '{text}'")
    try:
        bounds = [float(part) for part in parts[:4]]
        sizes = [int(part) for part in parts[4:]]
    except ValueError:
        raise ConfigurationError(f"Could not parse grid '{text}'")
    if sizes:
        return GridSpec(*bounds, nx=sizes[0], ny=sizes[1])
    return GridSpec(*bounds)


def _integer(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigurationError(f"'{key}' must be an integer, got '{text}'")


def _real(key: str, text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigurationError(f"'{key}' must be a number, got '{text}'")


@dataclass
class RunConfig:
    """Resolved settings of one command run."""
    gamma: Optional[complex] = None
    heterodyne: Optional[HeterodyneSpec] = None
    rho1: StatePrep = field(default_factory=StatePrep.vacuum)
    rho2: StatePrep = field(default_factory=StatePrep.vacuum)
    sigma: StatePrep = field(default_factory=StatePrep.vacuum)
    grid: Optional[GridSpec] = None
    samples: int = 0
    seed: Optional[int] = None
    out: Optional[Path] = None
    truncation: Optional[TruncationSpec] = None
    bins: Optional[int] = None
    raw: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.samples < 0:
            raise ConfigurationError(f"samples must be non-negative, got {self.samples}")
        if self.samples > 0 and self.seed is None:
            raise ConfigurationError("A seed is required when samples > 0")

    @classmethod
    def from_values(cls, values: Mapping[str, str]) -> 'RunConfig':
        """Build a config from raw string values keyed as in a run-config file."""
        values = {key: value for key, value in values.items() if value is not None}
        unknown = set(values) - set(KNOWN_KEYS)
        if unknown:
            raise ConfigurationError(f"Unknown run-config keys: {', '.join(sorted(unknown))}")

        kwargs: Dict[str, Any] = {'raw': dict(values)}
        if 'gamma' in values:
            kwargs['gamma'] = parse_gamma(values['gamma'])
        for key in ('rho1', 'rho2', 'sigma'):
            if key in values:
                kwargs[key] = parse_prep(values[key])
        if 'grid' in values:
            kwargs['grid'] = parse_grid(values['grid'])
        if 'samples' in values:
            kwargs['samples'] = _integer('samples', values['samples'])
        if 'seed' in values:
            kwargs['seed'] = _integer('seed', values['seed'])
        if 'out' in values:
            kwargs['out'] = Path(values['out'])
        if 'bins' in values:
            kwargs['bins'] = _integer('bins', values['bins'])

        if 'nmax' in values or 'buffer' in values:
            default = TruncationSpec.default()
            kwargs['truncation'] = TruncationSpec(
                n_max=_integer('nmax', values['nmax']) if 'nmax' in values else default.n_max,
                buffer=_integer('buffer', values['buffer']) if 'buffer' in values else default.buffer,
            )

        if 'omega1' in values or 'omega_i' in values:
            if 'omega1' not in values:
                raise ConfigurationError("omega_i needs omega1")
            kwargs['heterodyne'] = HeterodyneSpec(
                omega_signal=_real('omega1', values['omega1']),
                omega_intermediate=_real('omega_i', values.get('omega_i', '0')),
            )
        return cls(**kwargs)

    @classmethod
    def load(cls, path=None, overrides: Optional[Mapping[str, Optional[str]]] = None) -> 'RunConfig':
        """Read an optional config file and apply command-line overrides on top."""
        values: Dict[str, str] = read_config_file(path) if path else {}
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = str(value)
        config = cls.from_values(values)
        logger.debug(f"Loaded run config: {config.raw}")
        return config

    @property
    def preparation(self) -> Preparation:
        return Preparation(rho1=self.rho1, rho2=self.rho2, sigma=self.sigma)

    @property
    def output_dir(self) -> Path:
        return self.out if self.out is not None else Path(get_setting('ZGAMMA_OUTPUT_DIR', 'runs'))

    def require_gamma(self) -> complex:
        if self.gamma is None:
            raise ConfigurationError("gamma is required (--gamma or 'gamma =' in the run config)")
        return self.gamma

    def require_heterodyne(self) -> HeterodyneSpec:
        if self.heterodyne is None:
            raise ConfigurationError("omega1 is required (--omega1 or 'omega1 =' in the run config)")
        return self.heterodyne

    def to_dict(self) -> Dict[str, Any]:
        """Resolved parameters for result files and the run ledger."""
        return {
            'gamma': [self.gamma.real, self.gamma.imag] if self.gamma is not None else None,
            'heterodyne': self.heterodyne.to_dict() if self.heterodyne else None,
            'preparation': {'rho1': str(self.rho1), 'rho2': str(self.rho2), 'sigma': str(self.sigma)},
            'grid': self.grid.to_dict() if self.grid else 'auto',
            'samples': self.samples,
            'seed': self.seed,
            'out': str(self.output_dir),
            'truncation': (
                {'n_max': self.truncation.n_max, 'buffer': self.truncation.buffer} if self.truncation else None
            ),
            'bins': self.bins,
        }
