"""Squared L2 discrepancies by the closed pair-sum (Warnock-type) formulas.

For ``P = {x_0, ..., x_{N-1}}`` in ``[0,1)^d``::

    standard  N^2/3^d  - N/2^(d-1) sum_k prod_i (1 - x_ki^2)
                       + sum_{k,l} prod_i min(1 - x_ki, 1 - x_li)
    extreme   N^2/12^d - N/2^(d-1) sum_k prod_i x_ki (1 - x_ki)
                       + sum_{k,l} prod_i (min(x_ki, x_li) - x_ki x_li)
    periodic -N^2/3^d  + sum_{k,l} prod_i (1/2 - |x_ki - x_li| + (x_ki - x_li)^2)

The double sum is symmetric, so it is evaluated over diagonal row blocks
plus twice the strictly upper rectangles. With ``summation="compensated"``
every block is reduced with TwoSum cascading and all partial results,
including the constant ``N^2/c^d`` split into a double-double, are combined
by :func:`math.fsum`. That makes the result independent of the block
schedule and of the number of worker threads.
"""

from __future__ import annotations

import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from ..errors import EmptyPointSet, NegativeDiscrepancy
from ..pointset import PointSet
from ..summation import two_sum_reduce

KINDS = ("standard", "extreme", "periodic")
SUMMATIONS = ("naive", "compensated")

THREADS_ENV = "L2DISC_THREADS"

# squared values in [-NEGATIVE_SLACK, 0) are rounding noise and are clamped
NEGATIVE_SLACK = 1e-12

# elements per (block x N x d) work array
_BLOCK_ELEMENTS = 1 << 22


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def clamp_nonnegative(value: float, what: str = "squared discrepancy") -> float:
    if value >= 0.0:
        return value
    if value >= -NEGATIVE_SLACK:
        warnings.warn(f"{what} {value:.3e} clamped to 0", RuntimeWarning, stacklevel=3)
        return 0.0
    raise NegativeDiscrepancy(f"{what} is {value!r}; expected >= 0")


def _double_double(value: Fraction) -> tuple[float, float]:
    hi = float(value)
    return hi, float(value - Fraction(hi))


# -- pair kernels: rows a (b, d) against rows c (n, d) -> (b, n) ------------


def _standard_kernel(a, c):
    return np.prod(np.minimum(1.0 - a[:, None, :], 1.0 - c[None, :, :]), axis=2)


def _extreme_kernel(a, c):
    ai = a[:, None, :]
    ci = c[None, :, :]
    return np.prod(np.minimum(ai, ci) - ai * ci, axis=2)


def _periodic_kernel(a, c):
    diff = np.abs(a[:, None, :] - c[None, :, :])
    return np.prod(0.5 - diff + diff * diff, axis=2)


_KERNELS = {
    "standard": _standard_kernel,
    "extreme": _extreme_kernel,
    "periodic": _periodic_kernel,
}


def _row_blocks(n: int, d: int) -> list[tuple[int, int]]:
    size = max(1, _BLOCK_ELEMENTS // max(1, n * d))
    return [(a, min(n, a + size)) for a in range(0, n, size)]


def symmetric_pair_sum(x: np.ndarray, kernel, summation: str = "compensated", threads=None):
    """``sum_{k,l} kernel(x_k, x_l)`` for a symmetric kernel.

    Returns a list of float parts whose exact sum is the result (one part for
    naive summation, hi/lo pairs per block otherwise).
    """
    n, d = x.shape
    blocks = _row_blocks(n, d)

    def work(block):
        a, b = block
        diag = kernel(x[a:b], x[a:b])
        right = kernel(x[a:b], x[b:]) if b < n else np.zeros(0)
        if summation == "naive":
            return [float(np.sum(diag)) + 2.0 * float(np.sum(right))]
        dh, dl = two_sum_reduce(diag)
        rh, rl = two_sum_reduce(right)
        return [dh, dl, 2.0 * rh, 2.0 * rl]

    threads = default_threads() if threads is None else max(1, int(threads))
    if threads == 1 or len(blocks) == 1:
        results = [work(blk) for blk in blocks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, blocks))
    if summation == "naive":
        return [sum(r[0] for r in results)]
    return [part for r in results for part in r]


def _linear_parts(values: np.ndarray, summation: str) -> list[float]:
    if summation == "naive":
        return [float(np.sum(values))]
    return list(two_sum_reduce(values))


def _check(pointset: PointSet, summation: str) -> np.ndarray:
    if not isinstance(pointset, PointSet):
        pointset = PointSet(pointset)
    if pointset.n_points < 1:
        raise EmptyPointSet("empty point set")
    if summation not in SUMMATIONS:
        raise ValueError(f"summation must be one of {SUMMATIONS}, got {summation!r}")
    return pointset.points


def l2_sq(pointset: PointSet, kind: str, summation: str = "compensated", threads=None) -> float:
    """Squared L2 discrepancy of the given ``kind`` by the pair-sum formula."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    x = _check(pointset, summation)
    n, d = x.shape
    pair = symmetric_pair_sum(x, _KERNELS[kind], summation, threads)

    if kind == "periodic":
        const = Fraction(-(n * n), 3**d)
        linear = []
    else:
        if kind == "standard":
            const = Fraction(n * n, 3**d)
            lin = np.prod(1.0 - x * x, axis=1)
        else:
            const = Fraction(n * n, 12**d)
            lin = np.prod(x * (1.0 - x), axis=1)
        # scaling by -N / 2^(d-1) is inexact unless N is a power of two, so
        # the rounding error of each product is carried along
        scale = -n / 2.0 ** (d - 1)
        linear = []
        for part in _linear_parts(lin, summation):
            prod = scale * part
            linear.append(prod)
            if summation == "compensated":
                linear.append(_two_prod_err(scale, part, prod))

    if summation == "naive":
        value = float(const) + sum(linear) + pair[0]
    else:
        value = math.fsum([*_double_double(const), *linear, *pair])
    return clamp_nonnegative(value, f"{kind} squared discrepancy")


def _two_prod_err(a: float, b: float, p: float) -> float:
    """Rounding error of ``p = fl(a*b)`` (Dekker's TwoProduct)."""
    return float(Fraction(a) * Fraction(b) - Fraction(p))


def l2_standard_sq(pointset: PointSet, summation: str = "compensated", threads=None) -> float:
    """Squared standard (anchored-box) L2 discrepancy."""
    return l2_sq(pointset, "standard", summation, threads)


def l2_extreme_sq(pointset: PointSet, summation: str = "compensated", threads=None) -> float:
    """Squared extreme (arbitrary-box) L2 discrepancy."""
    return l2_sq(pointset, "extreme", summation, threads)


def l2_periodic_sq(pointset: PointSet, summation: str = "compensated", threads=None) -> float:
    """Squared periodic (torus-box) L2 discrepancy."""
    return l2_sq(pointset, "periodic", summation, threads)


# -- batched standard discrepancy for Monte Carlo over shifts -------------


def standard_sq_batch(x: np.ndarray) -> np.ndarray:
    """Standard squared discrepancy of a stack of point sets.

    ``x`` has shape ``(B, N, d)``; returns ``B`` values computed with plain
    float summation, which is adequate for the small ``N`` of the shift
    experiments.
    """
    b, n, d = x.shape
    lin = np.prod(1.0 - x * x, axis=2).sum(axis=1)
    comp = 1.0 - x
    pair = np.prod(np.minimum(comp[:, :, None, :], comp[:, None, :, :]), axis=3).sum(axis=(1, 2))
    return n * n / 3.0**d - n / 2.0 ** (d - 1) * lin + pair
