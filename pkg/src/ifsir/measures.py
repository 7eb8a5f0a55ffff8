"""Distance and closeness measures between intuitionistic fuzzy values.

Both metrics act on the full (mu, nu, pi) triple. The closeness coefficient
locates a value between an ideal and an anti-ideal reference point, yielding
1 at the ideal and 0 at the anti-ideal.
"""

from __future__ import annotations

import enum
import math

from .errors import DegenerateReference
from .ifn import Ifn


class Metric(enum.Enum):
    NORMALIZED_EUCLIDEAN = "euclidean"
    NORMALIZED_HAMMING = "hamming"


def distance(metric: Metric, x: Ifn, y: Ifn) -> float:
    """Normalized distance in [0, 1] between two IFNs.

    Euclidean: ``sqrt(((d_mu)^2 + (d_nu)^2 + (d_pi)^2) / 2)``
    Hamming:   ``(|d_mu| + |d_nu| + |d_pi|) / 2``
    """
    dmu = x.mu - y.mu
    dnu = x.nu - y.nu
    dpi = x.pi - y.pi
    if metric is Metric.NORMALIZED_EUCLIDEAN:
        return math.sqrt(0.5 * (dmu * dmu + dnu * dnu + dpi * dpi))
    if metric is Metric.NORMALIZED_HAMMING:
        return 0.5 * (abs(dmu) + abs(dnu) + abs(dpi))
    raise TypeError(f"unknown metric {metric!r}")


def closeness(metric: Metric, x: Ifn, ideal: Ifn, anti: Ifn) -> float:
    """Relative closeness ``D(x, anti) / (D(x, ideal) + D(x, anti))``.

    Equals 1 iff ``x == ideal`` and 0 iff ``x == anti``. The denominator is
    bounded below by ``D(ideal, anti)``, so it can vanish only for a
    degenerate reference pair, which is rejected.
    """
    if ideal == anti:
        raise DegenerateReference(f"ideal and anti-ideal coincide at {ideal}")
    to_ideal = distance(metric, x, ideal)
    to_anti = distance(metric, x, anti)
    return to_anti / (to_ideal + to_anti)
