"""Brute-force integration of the defining integrals for small planar sets.

The local discrepancy of a box is ``A - N * vol`` where ``A`` counts points
in the box. Per axis the box parameters live in ``[0,1]`` (standard),
``{x <= y}`` (extreme) or ``[0,1]^2`` with wraparound (periodic). Splitting
each per-axis domain along the point coordinates gives cells on which the
set of captured coordinates is fixed and the side length is a polynomial.
On a product of two such cells the squared local discrepancy integrates to::

    A^2 mu_1 mu_2 - 2 A N (int L_1)(int L_2) + N^2 (int L_1^2)(int L_2^2)

Everything is done in :class:`fractions.Fraction`, independently of the
pair-sum formulas, so this module serves as an oracle for them.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from ..errors import DimensionMismatch, EmptyPointSet, TooManyPoints
from ..pointset import PointSet

MAX_CELL_POINTS = 16


def _moments(a: Fraction, b: Fraction):
    """``(int 1, int t, int t^2)`` over ``[a, b]``."""
    return b - a, (b * b - a * a) / 2, (b**3 - a**3) / 3


def _axis_cells(coords: list[Fraction], kind: str):
    """Map indicator vector -> [mu, int L, int L^2] for one axis."""
    breaks = sorted(set(coords) | {Fraction(0), Fraction(1)})
    spans = [(breaks[i], breaks[i + 1]) for i in range(len(breaks) - 1)]
    cells = defaultdict(lambda: [Fraction(0)] * 3)
    none = tuple(False for _ in coords)
    every = tuple(True for _ in coords)

    def add(key, mu, l1, l2):
        acc = cells[key]
        acc[0] += mu
        acc[1] += l1
        acc[2] += l2

    if kind == "standard":
        # box [0, t); c is captured iff c < t, i.e. c <= left end of the cell
        for a, b in spans:
            mu, t1, t2 = _moments(a, b)
            add(tuple(c <= a for c in coords), mu, t1, t2)
        return cells

    for i, (ai, bi) in enumerate(spans):
        wi, x1, x2 = _moments(ai, bi)
        for j, (aj, bj) in enumerate(spans):
            wj, y1, y2 = _moments(aj, bj)
            if i < j:
                # [x, y) with x in cell i, y in cell j
                key = tuple(bi <= c <= aj for c in coords)
                add(key, wi * wj, wi * y1 - wj * x1, wi * y2 - 2 * x1 * y1 + wj * x2)
            elif i == j:
                # x < y inside one cell: nothing captured, L = y - x
                add(none, wi * wi / 2, wi**3 / 6, wi**4 / 12)
                if kind == "periodic":
                    # y < x inside one cell: [0, y) u [x, 1) captures all points
                    add(every, wi * wi / 2, wi * wi / 2 - wi**3 / 6, wi * wi / 2 - wi**3 / 3 + wi**4 / 12)
            elif kind == "periodic":
                # y in an earlier cell than x: [0, y) u [x, 1), L = 1 - x + y
                key = tuple(c <= aj or c >= bi for c in coords)
                z1 = y1 + wj
                z2 = y2 + 2 * y1 + wj
                add(key, wi * wj, wi * z1 - wj * x1, wi * z2 - 2 * x1 * z1 + wj * x2)
    return cells


def cell_exact_sq(pointset, kind: str, exact: bool = False):
    """Squared discrepancy of a planar set by exact cellwise integration.

    Parameters
    ----------
    pointset : PointSet
        ``d = 2`` and at most 16 points.
    kind : {"standard", "extreme", "periodic"}
    exact : bool
        Return a :class:`Fraction` instead of a float.
    """
    if not isinstance(pointset, PointSet):
        pointset = PointSet(pointset)
    if pointset.dim != 2:
        raise DimensionMismatch(f"cell_exact_sq needs d = 2, got d = {pointset.dim}")
    n = pointset.n_points
    if n < 1:
        raise EmptyPointSet("empty point set")
    if n > MAX_CELL_POINTS:
        raise TooManyPoints(f"cell_exact_sq handles at most {MAX_CELL_POINTS} points, got {n}")
    if kind not in ("standard", "extreme", "periodic"):
        raise ValueError(f"unknown kind {kind!r}")

    rows = pointset.fractions()
    ax1 = _axis_cells([r[0] for r in rows], kind)
    ax2 = _axis_cells([r[1] for r in rows], kind)
    total = Fraction(0)
    for k1, (m1, l1, q1) in ax1.items():
        for k2, (m2, l2, q2) in ax2.items():
            a = sum(1 for u, v in zip(k1, k2) if u and v)
            total += a * a * m1 * m2 - 2 * a * n * l1 * l2 + n * n * q1 * q2
    return total if exact else float(total)
