"""Weighted aggregation operators for IFN collections (IFWA and IFWG).

Weights are non-negative reals used raw as exponents; they are deliberately
NOT normalized to sum to one. ``0 ** 0 == 1`` makes zero-weight entries
neutral, so an all-zero weight vector collapses IFWA to (0, 1) and IFWG to
(1, 0), the respective fold identities.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import EmptyInput, LengthMismatch
from .ifn import Ifn


def _check(values: Sequence[Ifn], weights: Sequence[float]) -> None:
    if len(values) == 0:
        raise EmptyInput("cannot aggregate an empty collection")
    if len(values) != len(weights):
        raise LengthMismatch(f"{len(values)} values vs {len(weights)} weights")
    for w in weights:
        if not (w >= 0.0 and math.isfinite(w)):
            raise LengthMismatch(f"weights must be finite and >= 0, got {w!r}")


def ifwa(values: Sequence[Ifn], weights: Sequence[float]) -> Ifn:
    """Intuitionistic fuzzy weighted average.

    Closed form ``(1 - prod (1 - mu_k)^w_k, prod nu_k^w_k)``; algebraically
    the fold of ``+`` over each value scaled by its weight.
    """
    _check(values, weights)
    one_minus_mu = 1.0
    nu = 1.0
    for value, w in zip(values, weights):
        one_minus_mu *= (1.0 - value.mu) ** w
        nu *= value.nu**w
    return Ifn(1.0 - one_minus_mu, nu)


def ifwg(values: Sequence[Ifn], weights: Sequence[float]) -> Ifn:
    """Intuitionistic fuzzy weighted geometric mean.

    Closed form ``(prod mu_k^w_k, 1 - prod (1 - nu_k)^w_k)``; algebraically
    the fold of ``*`` over each value raised to its weight.
    """
    _check(values, weights)
    mu = 1.0
    one_minus_nu = 1.0
    for value, w in zip(values, weights):
        mu *= value.mu**w
        one_minus_nu *= (1.0 - value.nu) ** w
    return Ifn(mu, 1.0 - one_minus_nu)
