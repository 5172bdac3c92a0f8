"""Compensated reductions for the O(N^2) pair sums.

``two_sum_reduce`` is a vectorized cascaded summation (Ogita, Rump & Oishi,
"Sum2"): the array is folded pairwise with the error-free transformation
TwoSum and the rounding errors of every level are collected separately. The
result is as accurate as if computed in twice the working precision, then
rounded once.
"""

from __future__ import annotations

import math

import numpy as np


def two_sum(a, b):
    """Error-free transformation: ``a + b == s + e`` exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def two_sum_reduce(values) -> tuple[float, float]:
    """Return ``(hi, lo)`` with ``hi + lo`` approximating ``sum(values)``.

    The pair is meant to be fed into :func:`math.fsum` together with the
    pairs of other blocks, so that block results combine without loss.
    """
    x = np.asarray(values, dtype=np.float64).ravel()
    if x.size == 0:
        return 0.0, 0.0
    errors = []
    while x.size > 1:
        if x.size % 2:
            x = np.append(x, 0.0)
        s, e = two_sum(x[0::2], x[1::2])
        errors.append(math.fsum(e) if e.size < 64 else float(np.sum(e)))
        x = s
    return float(x[0]), math.fsum(errors)


def compensated_sum(values) -> float:
    hi, lo = two_sum_reduce(values)
    return hi + lo


def naive_sum(values) -> float:
    return float(np.sum(values))
