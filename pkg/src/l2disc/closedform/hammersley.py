"""Exact discrepancy formulas for the two-dimensional Hammersley set.

All functions work in exact rational arithmetic and convert to float at the
end unless ``exact=True`` is passed.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields
from fractions import Fraction

import numpy as np

from ..errors import OutOfRange
from ..pointset import _bit_reverse

# the direct O(4^m) oracle keeps its int64 row sums exact up to here
MAX_DIRECT_M = 12


def _out(value: Fraction, exact: bool):
    return value if exact else float(value)


def _check_m(m: int) -> int:
    if int(m) != m or m < 0:
        raise OutOfRange(f"m must be a non-negative integer, got {m!r}")
    return int(m)


def hammersley_standard_sq(m: int, exact: bool = False):
    """Squared standard discrepancy of the ``2^m``-point Hammersley set."""
    m = _check_m(m)
    v = (
        Fraction(m * m, 64)
        + Fraction(29 * m, 192)
        + Fraction(3, 8)
        - Fraction(m, 2 ** (m + 4))
        + Fraction(1, 2 ** (m + 2))
        - Fraction(1, 9 * 2 ** (2 * m + 3))
    )
    return _out(v, exact)


def hammersley_extreme_sq(m: int, exact: bool = False):
    """``m/64 + 1/72 - 1/(9 * 4^(m+2))``."""
    m = _check_m(m)
    return _out(Fraction(m, 64) + Fraction(1, 72) - Fraction(1, 9 * 4 ** (m + 2)), exact)


def hammersley_periodic_sq(m: int, exact: bool = False):
    """``m/16 + 1/9 + 1/(9 * 4^(m+1))``."""
    m = _check_m(m)
    return _out(Fraction(m, 16) + Fraction(1, 9) + Fraction(1, 9 * 4 ** (m + 1)), exact)


def hammersley_digital_mean_sq(m: int, exact: bool = False):
    """Mean squared standard discrepancy over uniform digital shifts."""
    m = _check_m(m)
    return _out(Fraction(m, 24) + Fraction(5, 36), exact)


def hammersley_digital_mean_sq_mbit(m: int, exact: bool = False):
    """Mean squared standard discrepancy over the ``4^m`` shifts with ``m``
    binary digits per coordinate."""
    m = _check_m(m)
    v = Fraction(m, 24) + Fraction(3, 8) + Fraction(1, 4 * 2**m) - Fraction(1, 72 * 4**m)
    return _out(v, exact)


@dataclass(frozen=True)
class HammersleySums:
    """The sums ``S_1..S_10`` over the points ``(x_k, y_k)`` of ``H_m``.

    ``s1, s2, s4, s6, s7, s8, s9`` have equal x- and y-versions; the fields
    hold the version with the roles as written below::

        s1 = sum x_k               s6  = sum |x_k - x_l|
        s2 = sum x_k^2             s7  = sum x_k |y_k - y_l|
        s3 = sum x_k y_k           s8  = sum x_k^2 |y_k - y_l|
        s4 = sum x_k y_k^2         s9  = sum x_k x_l |y_k - y_l|
        s5 = sum x_k^2 y_k^2       s10 = sum |x_k - x_l| |y_k - y_l|

    Double sums run over all ordered pairs ``(k, l)``.
    """

    s1: Fraction
    s2: Fraction
    s3: Fraction
    s4: Fraction
    s5: Fraction
    s6: Fraction
    s7: Fraction
    s8: Fraction
    s9: Fraction
    s10: Fraction

    def as_tuple(self) -> tuple:
        return astuple(self)

    def as_floats(self) -> dict:
        return {f.name: float(getattr(self, f.name)) for f in fields(self)}


def hammersley_sums(m: int) -> HammersleySums:
    """Closed forms of ``S_1..S_10``, evaluated exactly."""
    m = _check_m(m)
    F = Fraction
    t = 2**m
    return HammersleySums(
        s1=F(t - 1, 2),
        s2=F((t - 1) * (2 * t - 1), 6 * t),
        s3=F(t, 4) + F(m, 8) - F(1, 2) + F(1, 4 * t),
        s4=F((t - 1) * (4 ** (m + 1) + 3 * t * (m - 2) + 2), 3 * 2 ** (2 * m + 3)),
        s5=F(
            8 * (2 ** (2 * m + 1) - 3 * t + 1) ** 2 + 9 * m * t * (4 ** (m + 1) + t * (m - 9) + 4),
            9 * 2 ** (3 * m + 5),
        ),
        s6=F(4**m - 1, 3),
        s7=F((t - 1) ** 2 * (t + 1), 6 * t),
        s8=F(16 * (t - 1) ** 2 * (2 ** (2 * m + 1) + t - 1) + 9 * m * (m - 1) * 4**m, 9 * 2 ** (2 * m + 5)),
        s9=F(
            8 * (3 * 16**m - 4**m - 6 * 8**m + 3 * 2 ** (m + 1) - 2) - 3 * m * 4**m * (3 * m + 1),
            9 * 2 ** (2 * m + 5),
        ),
        s10=F(8 * (4**m - 1) + 9 * m * m + 3 * m, 72),
    )


def direct_hammersley_sums(m: int) -> HammersleySums:
    """``S_1..S_10`` by explicit summation over the points of ``H_m``.

    Coordinates are handled as integers over ``2^m``; every sum is formed in
    integers and divided once, so the result is exact.
    """
    m = _check_m(m)
    if m > MAX_DIRECT_M:
        raise OutOfRange(f"direct sums are limited to m <= {MAX_DIRECT_M}")
    n = 2**m
    x = np.arange(n, dtype=np.int64)
    y = _bit_reverse(x, m)

    def tot(a) -> int:
        return int(sum(int(v) for v in np.atleast_1d(a)))

    s6 = s7 = s8 = s9 = s10 = 0
    step = max(1, (1 << 20) // n)
    for a in range(0, n, step):
        xk, yk = x[a : a + step, None], y[a : a + step, None]
        dx = np.abs(xk - x[None, :])
        dy = np.abs(yk - y[None, :])
        s6 += tot(dx.sum(axis=1))
        s7 += tot(xk[:, 0] * dy.sum(axis=1))
        s8 += tot(xk[:, 0] ** 2 * dy.sum(axis=1))
        s9 += tot(xk[:, 0] * (dy * x[None, :]).sum(axis=1))
        s10 += tot((dx * dy).sum(axis=1))

    F = Fraction
    return HammersleySums(
        s1=F(tot(x), n),
        s2=F(tot(x * x), n**2),
        s3=F(tot(x * y), n**2),
        s4=F(tot(x * y * y), n**3),
        s5=F(tot(x * x * y * y), n**4),
        s6=F(s6, n),
        s7=F(s7, n**2),
        s8=F(s8, n**3),
        s9=F(s9, n**3),
        s10=F(s10, n**2),
    )


def hammersley_sq_from_sums(m: int, s: HammersleySums) -> dict:
    """Assemble the three squared discrepancies of ``H_m`` from ``S_1..S_10``."""
    m = _check_m(m)
    t = 2**m
    q = Fraction(1, 4)
    standard = (
        Fraction(11 * 4**m, 18)
        - Fraction(t, 2) * (s.s5 - 2 * s.s2)
        + q * (-(2 ** (m + 3)) * s.s1 + 2 ** (m + 1) * s.s3 + 2 * s.s1**2 - 4 * s.s6 + 4 * s.s7 + s.s10)
    )
    extreme = (
        Fraction(4**m, 144)
        - Fraction(t, 2) * (s.s3 - 2 * s.s4 + s.s5)
        + q
        * (
            2 ** (m + 1) * s.s3
            + 2 * s.s1**2
            - 8 * s.s1 * s.s3
            + 4 * s.s3**2
            - 4 * s.s7
            + 4 * s.s9
            + s.s10
        )
    )
    periodic = (
        Fraction(5 * 4**m, 36)
        - 4 * s.s8
        + 4 * s.s9
        - s.s6
        + 2 ** (m + 1) * s.s2
        - 2 * s.s1**2
        + 2 ** (m + 1) * s.s5
        - 8 * s.s1 * s.s4
        + 4 * s.s3**2
        + 2 * s.s2**2
        + s.s10
    )
    return {"standard": standard, "extreme": extreme, "periodic": periodic}
