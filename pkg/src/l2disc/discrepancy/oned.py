"""One-dimensional specializations.

With the points sorted, ``x_0 <= ... <= x_{N-1}``::

    extreme^2  = 1/12 + 1/2 sum_{n,m} (x_n - x_m - (n - m)/N)^2
    periodic^2 = sum_{n,m} B_2(|x_n - x_m|)

Expanding the squares gives O(N log N) moment forms, which are used for
large ``N``.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from ..errors import DimensionMismatch, EmptyPointSet
from ..pointset import PointSet
from ..summation import compensated_sum
from .pairsum import _double_double, clamp_nonnegative, symmetric_pair_sum

# above this many points the moment form replaces the explicit pair sum
PAIR_LIMIT = 4096


def _sorted_1d(pointset) -> np.ndarray:
    if not isinstance(pointset, PointSet):
        pointset = PointSet(pointset)
    if pointset.dim != 1:
        raise DimensionMismatch(f"expected d = 1, got d = {pointset.dim}")
    if pointset.n_points < 1:
        raise EmptyPointSet("empty point set")
    return np.sort(pointset.points[:, 0])


def _moment_parts(x: np.ndarray) -> list[float]:
    """Parts of ``sum_{n,m} (x_n - x_m - (n - m)/N)^2`` for sorted ``x``."""
    n = x.size
    idx = np.arange(n, dtype=np.float64)
    s1 = compensated_sum(x)
    # sum_{n,m} (x_n - x_m)^2 = 2 N sum x^2 - 2 (sum x)^2
    sq = 2.0 * n * compensated_sum(x * x)
    cross = -2.0 * s1 * s1
    # -2/N sum_{n,m} (x_n - x_m)(n - m) = -4 sum n x_n + 2 (N - 1) sum x_n
    mixed = [-4.0 * compensated_sum(idx * x), 2.0 * (n - 1) * s1]
    # sum_{n,m} ((n - m)/N)^2 = (N^2 - 1)/6
    return [sq, cross, *mixed, (n * n - 1) / 6.0]


def l2_extreme_sq_1d(pointset, method: str = "auto") -> float:
    """Squared extreme discrepancy of a 1-D point set.

    Parameters
    ----------
    pointset : PointSet
        Points with ``d = 1``; their order does not matter.
    method : {"auto", "pairs", "moments"}
        ``"pairs"`` evaluates the double sum directly, ``"moments"`` its
        expansion; ``"auto"`` picks by size.
    """
    x = _sorted_1d(pointset)
    n = x.size
    if method == "auto":
        method = "pairs" if n <= PAIR_LIMIT else "moments"
    if method == "pairs":
        t = x - np.arange(n) / n

        def kernel(a, c):
            diff = a[:, None, 0] - c[None, :, 0]
            return diff * diff

        parts = symmetric_pair_sum(t[:, None], kernel)
    elif method == "moments":
        parts = _moment_parts(x)
    else:
        raise ValueError(f"unknown method {method!r}")
    value = 1.0 / 12.0 + 0.5 * math.fsum(parts)
    return clamp_nonnegative(value, "extreme squared discrepancy")


def l2_periodic_sq_1d(pointset, method: str = "auto") -> float:
    """Squared periodic discrepancy of a 1-D point set.

    ``sum_{n,m} B_2(|x_n - x_m|)`` with ``B_2(t) = t^2 - t + 1/6``.
    """
    x = _sorted_1d(pointset)
    n = x.size
    if method == "auto":
        method = "pairs" if n <= PAIR_LIMIT else "moments"
    if method == "pairs":

        def kernel(a, c):
            diff = np.abs(a[:, None, 0] - c[None, :, 0])
            return diff * diff - diff

        parts = symmetric_pair_sum(x[:, None], kernel)
        value = math.fsum([*parts, *_double_double(Fraction(n * n, 6))])
    elif method == "moments":
        # for sorted points sum_{n,m} |x_n - x_m| = 2 sum_n (2n - N + 1) x_n,
        # which makes the periodic sum equal to the extreme pair sum plus 1/6
        value = math.fsum([*_moment_parts(x), 1.0 / 6.0])
    else:
        raise ValueError(f"unknown method {method!r}")
    return clamp_nonnegative(value, "periodic squared discrepancy")
