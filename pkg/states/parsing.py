"""
Parser for the preparation mini-language used by run configs and CLI flags.

    vacuum
    coherent:RE[,IM]
    number:M
    thermal:Z
    phase:RE[,IM]
    poisson:ALPHA_SQ
    weights:P0,P1,...
    gaussian:MEAN_Q,MEAN_P,VAR_Q,VAR_P[,COV_QP]
"""

from typing import List

from states.types import StatePrep, WeightKind, WeightRecipe
from states.weights import make_weights
from utils.exceptions import ConfigurationError


def _numbers(text: str, spec: str) -> List[float]:
    try:
        return [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ConfigurationError(f"Could not parse numbers in preparation '{spec}'")


def _expect(values: List[float], low: int, high: int, spec: str) -> None:
    if not low <= len(values) <= high:
        raise ConfigurationError(f"Preparation '{spec}' expects {low}-{high} numbers, got {len(values)}")


def parse_prep(spec: str) -> StatePrep:
    """
    Parse a preparation string.

    Raises:
        ConfigurationError: If the string is malformed
        DomainError: If the parsed parameters are out of domain
    """
    text = spec.strip()
    name, _, arguments = text.partition(':')
    name = name.strip().lower()

    if name == 'vacuum':
        if arguments.strip():
            raise ConfigurationError(f"'vacuum' takes no arguments, got '{spec}'")
        return StatePrep.vacuum()

    values = _numbers(arguments, spec)

    if name == 'coherent':
        _expect(values, 1, 2, spec)
        return StatePrep.coherent(complex(values[0], values[1] if len(values) > 1 else 0.0))
    if name == 'number':
        _expect(values, 1, 1, spec)
        if values[0] != int(values[0]):
            raise ConfigurationError(f"Photon number must be an integer in '{spec}'")
        return make_weights(WeightRecipe(kind=WeightKind.NUMBER, m=int(values[0])))
    if name == 'thermal':
        _expect(values, 1, 1, spec)
        return make_weights(WeightRecipe(kind=WeightKind.THERMAL, z=values[0]))
    if name == 'phase':
        _expect(values, 1, 2, spec)
        z = complex(values[0], values[1] if len(values) > 1 else 0.0)
        return make_weights(WeightRecipe(kind=WeightKind.PHASE_DIAGONAL, z=z))
    if name == 'poisson':
        _expect(values, 1, 1, spec)
        return make_weights(WeightRecipe(kind=WeightKind.POISSON_DIAGONAL, alpha_sq=values[0]))
    if name == 'weights':
        _expect(values, 1, 10_000, spec)
        return StatePrep.number_diagonal(values)
    if name == 'gaussian':
        _expect(values, 4, 5, spec)
        return StatePrep.gaussian(*values)

    raise ConfigurationError(f"Unknown preparation '{spec}'")
