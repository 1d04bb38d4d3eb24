"""
Number-diagonal weight recipes.

Thermal and phase-state diagonals use p_m = (1 - |z|^2)|z|^(2m) with tail
mass |z|^(2(M+1)) beyond cutoff M. Phase-averaged coherent states use the
Poisson weights p_m = exp(-|alpha|^2)|alpha|^(2m)/m!.
"""

import logging
import math

import numpy as np
from scipy import stats

from states.types import StatePrep, WeightKind, WeightRecipe
from utils.conf import get_setting
from utils.exceptions import DomainError, TruncationError

logger = logging.getLogger(__name__)


def _geometric_cutoff(ratio: float, tail_bound: float) -> int:
    if ratio == 0.0:
        return 0
    cutoff = max(0, int(math.ceil(math.log(tail_bound) / math.log(ratio))) - 1)
    while ratio ** (cutoff + 1) >= tail_bound:
        cutoff += 1
    return cutoff


def _poisson_cutoff(mean: float, tail_bound: float) -> int:
    if mean == 0.0:
        return 0
    cutoff = max(0, int(stats.poisson.isf(tail_bound, mean)) - 1)
    while stats.poisson.sf(cutoff, mean) >= tail_bound:
        cutoff += 1
    return cutoff


def _tail_mass(recipe: WeightRecipe, cutoff: int) -> float:
    if recipe.kind == WeightKind.NUMBER:
        return 0.0 if cutoff >= recipe.m else 1.0
    if recipe.kind == WeightKind.POISSON_DIAGONAL:
        return float(stats.poisson.sf(cutoff, recipe.alpha_sq))
    return abs(recipe.z) ** (2 * (cutoff + 1))


def _validate(recipe: WeightRecipe) -> None:
    if recipe.kind == WeightKind.NUMBER and recipe.m < 0:
        raise DomainError(f"Photon number must be non-negative, got {recipe.m}")
    if recipe.kind == WeightKind.THERMAL:
        if recipe.z.imag != 0 or not (0.0 <= recipe.z.real < 1.0):
            raise DomainError(f"Thermal z must be real in [0, 1), got {recipe.z}")
    if recipe.kind == WeightKind.PHASE_DIAGONAL and abs(recipe.z) >= 1.0:
        raise DomainError(f"Phase-state |z| must be below 1, got {abs(recipe.z)}")
    if recipe.kind == WeightKind.POISSON_DIAGONAL and not (recipe.alpha_sq >= 0.0 and math.isfinite(recipe.alpha_sq)):
        raise DomainError(f"alpha_sq must be finite and non-negative, got {recipe.alpha_sq}")


def _label(recipe: WeightRecipe) -> str:
    if recipe.kind == WeightKind.NUMBER:
        return f"number:{recipe.m}"
    if recipe.kind == WeightKind.THERMAL:
        return f"thermal:{recipe.z.real!r}"
    if recipe.kind == WeightKind.PHASE_DIAGONAL:
        return f"phase:{recipe.z.real!r},{recipe.z.imag!r}"
    return f"poisson:{recipe.alpha_sq!r}"


def make_weights(recipe: WeightRecipe) -> StatePrep:
    """
    Build a number-diagonal preparation from a recipe.

    Args:
        recipe: Weight recipe; cutoff None selects the smallest admissible cutoff

    Returns:
        NumberDiagonal StatePrep with weights renormalised to one

    Raises:
        DomainError: If the recipe parameters are out of domain
        TruncationError: If an explicit cutoff leaves tail mass above the bound
    """
    _validate(recipe)
    tail_bound = get_setting('ZGAMMA_WEIGHT_TAIL', 1e-12)

    if recipe.kind == WeightKind.NUMBER:
        automatic = recipe.m
    elif recipe.kind == WeightKind.POISSON_DIAGONAL:
        automatic = _poisson_cutoff(recipe.alpha_sq, tail_bound)
    else:
        automatic = _geometric_cutoff(abs(recipe.z) ** 2, tail_bound)

    cutoff = automatic if recipe.cutoff is None else recipe.cutoff
    tail = _tail_mass(recipe, cutoff)
    if recipe.kind == WeightKind.NUMBER and tail > 0:
        raise TruncationError(f"Cutoff {cutoff} cannot hold the number state |{recipe.m}>")
    if tail >= tail_bound:
        raise TruncationError(
            f"Cutoff {cutoff} leaves tail mass {tail:.3e} for {_label(recipe)}; needs cutoff >= {automatic}"
        )

    levels = np.arange(cutoff + 1)
    if recipe.kind == WeightKind.NUMBER:
        weights = (levels == recipe.m).astype(float)
    elif recipe.kind == WeightKind.POISSON_DIAGONAL:
        weights = stats.poisson.pmf(levels, recipe.alpha_sq) if recipe.alpha_sq > 0 else (levels == 0).astype(float)
    else:
        ratio = abs(recipe.z) ** 2
        weights = (1.0 - ratio) * ratio ** levels

    weights = weights / weights.sum()
    logger.debug(f"Built {_label(recipe)} weights with cutoff {cutoff}, tail {tail:.3e}")
    return StatePrep.number_diagonal(weights, label=_label(recipe))
