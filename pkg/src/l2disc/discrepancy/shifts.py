"""Monte Carlo averages of the standard discrepancy over random shifts."""

from __future__ import annotations

import math
from itertools import product

import numpy as np

from ..errors import BadParams
from ..pointset import (
    DyadicShift,
    PointSet,
    _random_dyadic_ints,
    digital_shift,
    from_dyadic_ints,
    to_dyadic_ints,
)
from .exact import exact_l2_sq
from .pairsum import l2_standard_sq, standard_sq_batch

_BATCH_ELEMENTS = 1 << 22


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(int(seed) & (2**64 - 1))


def _prepare(pointset, R) -> PointSet:
    if not isinstance(pointset, PointSet):
        pointset = PointSet(pointset)
    if int(R) < 2:
        raise BadParams(f"need at least 2 samples for a standard error, got R = {R}")
    return pointset


def _batch_size(n: int, d: int) -> int:
    return max(1, _BATCH_ELEMENTS // max(1, n * n * d))


def _summary(values: np.ndarray) -> tuple[float, float]:
    r = values.size
    return float(np.mean(values)), float(np.std(values, ddof=1) / math.sqrt(r))


def shift_average_geometric(pointset, R: int, seed: int = 0) -> tuple[float, float]:
    """Mean and standard error of the standard discrepancy over torus shifts.

    ``R`` shift vectors are drawn uniformly from ``[0,1)^d``. The population
    mean is the squared periodic discrepancy of ``pointset``.
    """
    pointset = _prepare(pointset, R)
    rng = _rng(seed)
    x = pointset.points
    n, d = x.shape
    deltas = rng.random((int(R), d))
    values = np.empty(int(R))
    step = _batch_size(n, d)
    for a in range(0, int(R), step):
        y = np.mod(x[None, :, :] + deltas[a : a + step, None, :], 1.0)
        y[y >= 1.0] = 0.0
        values[a : a + step] = standard_sq_batch(y)
    return _summary(values)


def shift_average_digital(pointset, R: int, w: int = 64, seed: int = 0) -> tuple[float, float]:
    """Mean and standard error of the standard discrepancy over digital shifts.

    Each sample XORs the first ``w`` binary digits of every coordinate with a
    uniformly random ``w``-digit shift.

    Raises
    ------
    InexactDyadicRepresentation
        If a coordinate has more than ``w`` binary digits.
    """
    pointset = _prepare(pointset, R)
    rng = _rng(seed)
    x = pointset.points
    n, d = x.shape
    R = int(R)
    if w > 64:
        values = np.array(
            [
                l2_standard_sq(digital_shift(pointset, DyadicShift.random(d, w, rng)))
                for _ in range(R)
            ]
        )
        return _summary(values)
    ints = to_dyadic_ints(x, w)
    shifts = _random_dyadic_ints(rng, (R, d), w)
    values = np.empty(R)
    step = _batch_size(n, d)
    for a in range(0, R, step):
        y = from_dyadic_ints(ints[None, :, :] ^ shifts[a : a + step, None, :], w)
        values[a : a + step] = standard_sq_batch(y)
    return _summary(values)


def digital_shift_average_exhaustive(pointset, w: int):
    """Exact mean of the squared standard discrepancy over all ``2^(w d)``
    digital shifts with ``w`` binary digits per coordinate.

    The point set must be dyadic with at most ``w`` digits; the result is a
    :class:`Fraction`.
    """
    if not isinstance(pointset, PointSet):
        pointset = PointSet(pointset)
    d = pointset.dim
    if w < 0 or w * d > 16:
        raise BadParams(f"exhaustive enumeration needs 0 <= w * d <= 16, got w = {w}, d = {d}")
    ints = to_dyadic_ints(pointset.points, w)
    exact = PointSet(pointset.points, ints.astype(np.int64), 1 << w)
    if w == 0:
        return exact_l2_sq(exact, "standard")
    total = 0
    for ints in product(range(1 << w), repeat=d):
        total += exact_l2_sq(digital_shift(exact, DyadicShift(ints, w)), "standard")
    return total / (1 << (w * d))
