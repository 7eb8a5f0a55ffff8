"""Intuitionistic fuzzy numbers and their primitive algebra.

An intuitionistic fuzzy number (IFN) is a pair ``(mu, nu)`` of a membership
and a non-membership degree with ``mu + nu <= 1``; the remainder
``pi = 1 - mu - nu`` is the hesitation degree. This module defines the value
type plus the standard operations on it:

* probabilistic sum (``a + b``) and product (``a * b``),
* the multiple law ``a.scale(lam)`` and the exponent law ``a ** lam``,
* complement, score ``mu - nu`` and accuracy ``mu + nu``,
* the score-then-accuracy total comparison (:func:`compare`).

Values are immutable; every operation returns a new, valid ``Ifn``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidIfn, NonPositiveScalar

# Accepted overshoot of mu + nu above 1. Published tables round to a few
# decimals, so pairs taken from print can be off by less than this.
VALIDITY_TOL = 1e-9


class Ordering(enum.Enum):
    """Exhaustive three-way comparison result."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Ifn:
    """An intuitionistic fuzzy number ``(mu, nu)``.

    Raises ``InvalidIfn`` on construction if either degree leaves ``[0, 1]``
    or ``mu + nu`` exceeds 1 beyond ``VALIDITY_TOL``.
    """

    mu: float
    nu: float

    def __post_init__(self) -> None:
        mu, nu = self.mu, self.nu
        if not (0.0 <= mu <= 1.0):  # also rejects NaN
            raise InvalidIfn(f"membership degree {mu!r} outside [0, 1]")
        if not (0.0 <= nu <= 1.0):
            raise InvalidIfn(f"non-membership degree {nu!r} outside [0, 1]")
        if mu + nu > 1.0 + VALIDITY_TOL:
            raise InvalidIfn(f"mu + nu = {mu + nu!r} exceeds 1 for ({mu!r}, {nu!r})")

    @property
    def pi(self) -> float:
        """Hesitation degree ``1 - mu - nu``, clamped at 0 against rounding."""
        return max(1.0 - self.mu - self.nu, 0.0)

    def complement(self) -> "Ifn":
        """Swap membership and non-membership; hesitation is preserved."""
        return Ifn(self.nu, self.mu)

    def __add__(self, other: "Ifn") -> "Ifn":
        """Probabilistic sum: ``(mu_a + mu_b - mu_a mu_b, nu_a nu_b)``."""
        if not isinstance(other, Ifn):
            return NotImplemented
        return Ifn(self.mu + other.mu - self.mu * other.mu, self.nu * other.nu)

    def __mul__(self, other: "Ifn") -> "Ifn":
        """Probabilistic product: ``(mu_a mu_b, nu_a + nu_b - nu_a nu_b)``."""
        if not isinstance(other, Ifn):
            return NotImplemented
        return Ifn(self.mu * other.mu, self.nu + other.nu - self.nu * other.nu)

    def scale(self, lam: float) -> "Ifn":
        """Multiple law: ``(1 - (1 - mu)^lam, nu^lam)`` for ``lam > 0``.

        ``scale(n)`` for integer n equals n-fold ``+`` of the value with itself.
        """
        if not lam > 0.0:
            raise NonPositiveScalar(f"scalar must be > 0, got {lam!r}")
        return Ifn(1.0 - (1.0 - self.mu) ** lam, self.nu**lam)

    def __pow__(self, lam: float) -> "Ifn":
        """Exponent law: ``(mu^lam, 1 - (1 - nu)^lam)`` for ``lam > 0``."""
        if not isinstance(lam, (int, float)):
            return NotImplemented
        if not lam > 0.0:
            raise NonPositiveScalar(f"exponent must be > 0, got {lam!r}")
        return Ifn(self.mu**lam, 1.0 - (1.0 - self.nu) ** lam)

    def score(self) -> float:
        """Score ``mu - nu`` in [-1, 1]; the primary comparison key."""
        return self.mu - self.nu

    def accuracy(self) -> float:
        """Accuracy ``mu + nu`` in [0, 1]; breaks score ties."""
        return self.mu + self.nu

    def __str__(self) -> str:
        return f"({self.mu:.4f}, {self.nu:.4f})"


def ranking_key(a: Ifn) -> tuple[float, float]:
    """Sort key realising the score-then-accuracy order (ascending)."""
    return (a.score(), a.accuracy())


def compare(a: Ifn, b: Ifn) -> Ordering:
    """Three-way comparison: by score, then by accuracy, else equal.

    Two values compare equal exactly when both score and accuracy agree,
    which pins down the underlying (mu, nu) pair.
    """
    if a.score() < b.score():
        return Ordering.LESS
    if a.score() > b.score():
        return Ordering.GREATER
    if a.accuracy() < b.accuracy():
        return Ordering.LESS
    if a.accuracy() > b.accuracy():
        return Ordering.GREATER
    return Ordering.EQUAL


#: Neutral element of ``+`` and absorbing element of ``*``.
ZERO = Ifn(0.0, 1.0)
#: Neutral element of ``*`` and absorbing element of ``+``; the ideal point.
ONE = Ifn(1.0, 0.0)
