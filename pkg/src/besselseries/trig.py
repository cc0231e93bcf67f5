"""Sine and cosine series obtained from the order-0 and order-1 Bessel
series at the edges of the scale range (b -> 0, b = 1).

With phi_k = sqrt(x^2 + (k pi)^2):

    cos x - 1 + x^2/2 = 2 sum_{k>=1} [1 - (-1)^k cos phi_k]
    1 - sin x / x     = 2 sum_{k>=1} (-1)^k sin phi_k / phi_k
    1 - sin x / x     = -2 sum_{k>=1} [(-1)^k - (k pi)^2 cos phi_k / phi_k^2
                                        - x^2 sin phi_k / phi_k^3]

The third form has alternating terms and its partial sums converge one
order faster in K than the second.  All three are summed through the
decomposition phi_k = k pi + delta_k, delta_k = x^2/(phi_k + k pi), which
turns each bracket into small-angle quantities:

    1 - (-1)^k cos phi_k  =  2 sin^2(delta_k / 2)
    (-1)^k sin phi_k      =  sin delta_k

so no large-argument trig reduction or O(1)-minus-O(1) cancellation occurs.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

__all__ = ["cos_series", "sin_series_1", "sin_series_2"]


def _check(x, K):
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"x must be finite, got {x!r}")
    if not isinstance(K, int) or K < 1:
        raise DomainError(f"K must be a positive integer, got {K!r}")


def _deltas(x, K):
    ks = np.arange(1, K + 1, dtype=np.float64)
    kpi = np.pi * ks
    ph = np.hypot(x, kpi)
    return ks, kpi, ph, x * x / (ph + kpi)


def cos_series(x: float, K: int) -> float:
    """Partial sum 2 sum_{k=1..K} [1 - (-1)^k cos phi_k] -> cos x - 1 + x^2/2.

    One-signed terms ~ x^4/(2 k pi)^2; the truncation error is close to
    x^4/(4 pi^2 K).
    """
    _check(x, K)
    _, _, _, d = _deltas(x, K)
    return 2.0 * math.fsum(2.0 * np.sin(d / 2.0) ** 2)


def sin_series_1(x: float, K: int) -> float:
    """Partial sum 2 sum_{k=1..K} (-1)^k sin phi_k / phi_k -> 1 - sin x / x.

    Terms are eventually one-signed, ~ x^2/(2(k pi)^2); truncation error is
    close to x^2/(pi^2 K).  Returns 0 at x = 0 (every term vanishes, matching
    the continuous limit of the left side).
    """
    _check(x, K)
    _, _, ph, d = _deltas(x, K)
    return 2.0 * math.fsum(np.sin(d) / ph)


def sin_series_2(x: float, K: int) -> float:
    """Partial sum of the faster alternating form of 1 - sin x / x.

    The bracket is evaluated as
        (-1)^k [ 2 sin^2(delta/2) + (x/phi)^2 (cos delta - sin delta / phi) ]
    which substitutes (k pi)^2/phi^2 = 1 - x^2/phi^2 to avoid forming the
    near-cancelling difference (-1)^k - cos phi directly against the
    (k pi)^2/phi^2 factor.  Truncation error is close to
    x^2 (1 + x^2/8) / (pi K)^2.
    """
    _check(x, K)
    ks, _, ph, d = _deltas(x, K)
    sgn = np.where(ks.astype(np.int64) % 2 == 0, 1.0, -1.0)
    bracket = 2.0 * np.sin(d / 2.0) ** 2 + (x * x / (ph * ph)) * (np.cos(d) - np.sin(d) / ph)
    return -2.0 * math.fsum(sgn * bracket)
