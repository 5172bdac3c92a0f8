"""Regular grids and the periodic/extreme relation."""

from __future__ import annotations

from fractions import Fraction

from ..errors import OutOfRange


def _check(m: int, d: int) -> None:
    if m < 1 or d < 1:
        raise OutOfRange(f"need m >= 1 and d >= 1, got m = {m}, d = {d}")


def grid_periodic_sq(m: int, d: int, exact: bool = False):
    """``(m^2/3 + 1/6)^d - (m^2/3)^d`` for the grid ``{0, 1/m, ...}^d``."""
    _check(m, d)
    v = (Fraction(m * m, 3) + Fraction(1, 6)) ** d - Fraction(m * m, 3) ** d
    return v if exact else float(v)


def grid_extreme_sq(m: int, d: int, exact: bool = False):
    """``(m^(2d) - (m^2 - 1)^d) / 12^d``."""
    _check(m, d)
    v = Fraction(m ** (2 * d) - (m * m - 1) ** d, 12**d)
    return v if exact else float(v)


def relation_residual(per_sq, extr_sq, N):
    """``per_sq - 4 extr_sq - 1/18 - 1/(18 N^2)``.

    Exact when all arguments are rationals (``Fraction`` or ``int``).
    """
    if all(isinstance(v, (Fraction, int)) for v in (per_sq, extr_sq, N)):
        return per_sq - 4 * extr_sq - Fraction(1, 18) - Fraction(1, 18 * N * N)
    return float(per_sq) - 4.0 * float(extr_sq) - 1.0 / 18.0 - 1.0 / (18.0 * float(N) ** 2)
