"""Exact rational evaluation of the pair-sum formulas.

Point sets that carry a common denominator ``D`` (Hammersley sets, lattices,
grids) have all pair terms in ``Z / D^(2d)``, so the three formulas can be
summed in integers. Row blocks run in int64 when the row totals provably fit,
otherwise in Python integers.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..errors import MethodUnsupportedForInput
from ..pointset import PointSet

_SAFE = 2**62
_BLOCK_ELEMENTS = 1 << 21


def _dtype(n: int, max_elem: int):
    return np.int64 if n * max_elem < _SAFE else object


def _pair_total(x, factor, max_factor: int) -> int:
    n, d = x.shape
    dtype = _dtype(n, max_factor**d)
    xs = x.astype(dtype)
    size = max(1, _BLOCK_ELEMENTS // max(1, n * d))
    total = 0
    for a in range(0, n, size):
        f = factor(xs[a : a + size, None, :], xs[None, :, :])
        prod = f[..., 0]
        for i in range(1, d):
            prod = prod * f[..., i]
        total += sum(int(v) for v in prod.sum(axis=1))
    return total


def exact_l2_sq(pointset: PointSet, kind: str) -> Fraction:
    """Squared discrepancy of an exact point set as a :class:`Fraction`.

    Raises
    ------
    MethodUnsupportedForInput
        If the point set has no common-denominator representation.
    """
    if not pointset.is_exact:
        raise MethodUnsupportedForInput("exact evaluation needs integer numerators")
    x = np.asarray(pointset.numerators, dtype=np.int64)
    D = int(pointset.denominator)
    n, d = x.shape
    rows = [[int(v) for v in row] for row in x.tolist()]

    def row_products(fn):
        s = 0
        for row in rows:
            p = 1
            for v in row:
                p *= fn(v)
            s += p
        return s

    if kind == "standard":
        pair = _pair_total(x, lambda a, c: D - np.maximum(a, c), D)
        lin = row_products(lambda v: D * D - v * v)
        return (
            Fraction(n * n, 3**d)
            - Fraction(n * lin, 2 ** (d - 1) * D ** (2 * d))
            + Fraction(pair, D**d)
        )
    if kind == "extreme":
        pair = _pair_total(x, lambda a, c: D * np.minimum(a, c) - a * c, D * D // 4 + 1)
        lin = row_products(lambda v: v * (D - v))
        return (
            Fraction(n * n, 12**d)
            - Fraction(n * lin, 2 ** (d - 1) * D ** (2 * d))
            + Fraction(pair, D ** (2 * d))
        )
    if kind == "periodic":

        def factor(a, c):
            diff = np.abs(a - c)
            return D * D - 2 * D * diff + 2 * diff * diff

        pair = _pair_total(x, factor, D * D)
        return Fraction(-(n * n), 3**d) + Fraction(pair, (2 * D * D) ** d)
    raise ValueError(f"unknown kind {kind!r}")
