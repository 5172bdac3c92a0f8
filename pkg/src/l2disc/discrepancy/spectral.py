"""Periodic discrepancy as a weighted sum of exponential sums (diaphony)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import BadParams, EmptyPointSet
from ..pointset import PointSet

# largest number of frequency vectors kept in memory at once
MAX_FREQUENCIES = 1 << 24
_CHUNK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class SpectralWeights:
    """Weights ``r(k) = prod_j r(k_j)`` with ``r(0) = 1`` and
    ``r(k) = 2 pi |k| / sqrt(6)`` otherwise."""

    def r(self, k):
        k = np.abs(np.asarray(k, dtype=np.float64))
        out = np.where(k == 0, 1.0, 2.0 * math.pi * k / math.sqrt(6.0))
        return out.prod(axis=-1) if out.ndim else float(out)

    def inverse_sq(self, k):
        """``1 / r(k)^2``; for a vector ``k`` the product over coordinates."""
        k = np.asarray(k, dtype=np.float64)
        safe = np.where(k == 0, 1.0, k)
        out = np.where(k == 0, 1.0, 6.0 / (4.0 * math.pi**2 * safe * safe))
        return out.prod(axis=-1) if out.ndim else float(out)

    @staticmethod
    def axis_tail_bound(K: int) -> float:
        """Upper bound on ``sum_{|k| > K} 1/r(k)^2`` in one coordinate."""
        return 3.0 / (math.pi**2 * K)


def exponential_sums(x: np.ndarray, K: int) -> np.ndarray:
    """``S(k) = sum_h exp(2 pi i k . x_h)`` on the box ``[-K, K]^d``.

    Axis ``j`` of the result is indexed by ``k_j + K``.
    """
    n, d = x.shape
    ks = np.arange(-K, K + 1, dtype=np.float64)
    # phases reduced mod 1 before exponentiating
    axes = [np.exp(2j * math.pi * np.mod(np.outer(x[:, j], ks), 1.0)) for j in range(d)]
    if d == 1:
        return axes[0].sum(axis=0)
    if d == 2:
        return axes[0].T @ axes[1]
    m = 2 * K + 1
    total = np.zeros(m**d, dtype=np.complex128)
    chunk = max(1, _CHUNK_ELEMENTS // m**d)
    for a in range(0, n, chunk):
        t = axes[0][a : a + chunk]
        for j in range(1, d):
            t = (t[:, :, None] * axes[j][a : a + chunk, None, :]).reshape(t.shape[0], -1)
        total += t.sum(axis=0)
    return total.reshape((m,) * d)


def diaphony_truncated(pointset, K: int) -> tuple[float, float]:
    """Truncated Fourier evaluation of the squared periodic discrepancy.

    Returns
    -------
    value : float
        ``3^-d sum_{0 < |k|_inf <= K} |S(k)|^2 / r(k)^2``, a lower bound.
    tail_bound : float
        Bound on the omitted frequencies, from ``|S(k)| <= N``, so that
        ``value <= periodic^2 <= value + tail_bound``.
    """
    if not isinstance(pointset, PointSet):
        pointset = PointSet(pointset)
    if pointset.n_points < 1:
        raise EmptyPointSet("empty point set")
    K = int(K)
    if K < 1:
        raise BadParams(f"K must be >= 1, got {K}")
    n, d = pointset.points.shape
    if (2 * K + 1) ** d > MAX_FREQUENCIES:
        raise BadParams(f"(2K+1)^d = {(2 * K + 1) ** d} frequencies is too many")

    s = exponential_sums(pointset.points, K)
    power = s.real**2 + s.imag**2
    w1 = SpectralWeights().inverse_sq(np.arange(-K, K + 1)[:, None])
    weights = w1
    for _ in range(1, d):
        weights = np.multiply.outer(weights, w1)
    weights = weights.reshape(power.shape).copy()
    weights[(K,) * d] = 0.0
    value = math.fsum((weights * power).ravel()) / 3.0**d

    inner = 1.5 - SpectralWeights.axis_tail_bound(K)
    tail = n * n / 3.0**d * (1.5**d - inner**d)
    return value, tail
