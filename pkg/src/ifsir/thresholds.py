"""Generalized criterion (threshold) functions.

Each shape maps a performance difference d to a preference intensity in
[0, 1], is non-decreasing, and returns 0 for d <= 0. The six classic
outranking shapes are provided plus a constant step, which fires a fixed
intensity for any strictly positive difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import InvalidThresholdParams


@dataclass(frozen=True)
class Step:
    """Constant intensity ``value`` for d > 0, else 0."""

    value: float

    def __post_init__(self) -> None:
        if not (0.0 < self.value <= 1.0):
            raise InvalidThresholdParams(f"step value must be in (0, 1], got {self.value!r}")

    def __call__(self, d: float) -> float:
        return self.value if d > 0.0 else 0.0


@dataclass(frozen=True)
class Usual:
    """1 for d > 0, else 0 (true criterion)."""

    def __call__(self, d: float) -> float:
        return 1.0 if d > 0.0 else 0.0


@dataclass(frozen=True)
class UShape:
    """1 beyond the indifference threshold q, else 0 (quasi-criterion)."""

    q: float

    def __post_init__(self) -> None:
        if not (self.q >= 0.0 and math.isfinite(self.q)):
            raise InvalidThresholdParams(f"q must be finite and >= 0, got {self.q!r}")

    def __call__(self, d: float) -> float:
        return 1.0 if d > self.q else 0.0


@dataclass(frozen=True)
class VShape:
    """Linear ramp from 0 to the preference threshold p, then 1."""

    p: float

    def __post_init__(self) -> None:
        if not (self.p > 0.0 and math.isfinite(self.p)):
            raise InvalidThresholdParams(f"p must be finite and > 0, got {self.p!r}")

    def __call__(self, d: float) -> float:
        return min(max(d, 0.0) / self.p, 1.0)


@dataclass(frozen=True)
class Level:
    """0 up to q, one half on (q, p], 1 beyond p."""

    q: float
    p: float

    def __post_init__(self) -> None:
        _check_qp(self.q, self.p)

    def __call__(self, d: float) -> float:
        if d <= self.q:
            return 0.0
        return 0.5 if d <= self.p else 1.0


@dataclass(frozen=True)
class LinearWithIndifference:
    """0 up to q, linear on (q, p], 1 beyond p."""

    q: float
    p: float

    def __post_init__(self) -> None:
        _check_qp(self.q, self.p)

    def __call__(self, d: float) -> float:
        if d <= self.q:
            return 0.0
        if d <= self.p:
            return (d - self.q) / (self.p - self.q)
        return 1.0


@dataclass(frozen=True)
class Gaussian:
    """Smooth ramp ``1 - exp(-d^2 / (2 sigma^2))`` for d > 0, else 0."""

    sigma: float

    def __post_init__(self) -> None:
        if not (self.sigma > 0.0 and math.isfinite(self.sigma)):
            raise InvalidThresholdParams(f"sigma must be finite and > 0, got {self.sigma!r}")

    def __call__(self, d: float) -> float:
        if d <= 0.0:
            return 0.0
        return 1.0 - math.exp(-(d * d) / (2.0 * self.sigma * self.sigma))


def _check_qp(q: float, p: float) -> None:
    if not (q >= 0.0 and math.isfinite(q)):
        raise InvalidThresholdParams(f"q must be finite and >= 0, got {q!r}")
    if not (math.isfinite(p) and p > q):
        raise InvalidThresholdParams(f"p must be finite and > q ({q!r}), got {p!r}")


ThresholdSpec = Union[Step, Usual, UShape, VShape, Level, LinearWithIndifference, Gaussian]

#: JSON ``kind`` tag -> (class, parameter names), used by the problem parser
#: and the report emitter.
KINDS: dict[str, tuple[type, tuple[str, ...]]] = {
    "step": (Step, ("value",)),
    "usual": (Usual, ()),
    "u_shape": (UShape, ("q",)),
    "v_shape": (VShape, ("p",)),
    "level": (Level, ("q", "p")),
    "linear": (LinearWithIndifference, ("q", "p")),
    "gaussian": (Gaussian, ("sigma",)),
}
