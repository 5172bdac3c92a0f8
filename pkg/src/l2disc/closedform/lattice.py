"""Closed forms for rational lattices ``{(k/q, {kp/q}) : 0 <= k < q}``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import BadParams, NonCoprime, NonPositiveModulus
from ..numtheory import dedekind_sum, fibonacci


def _check_pq(p: int, q: int) -> tuple[int, int]:
    p, q = int(p), int(q)
    if q < 1:
        raise NonPositiveModulus(f"q must be >= 1, got {q}")
    if math.gcd(p, q) != 1:
        raise NonCoprime(f"gcd({p}, {q}) = {math.gcd(p, q)}; the formulas need coprime p, q")
    return p % q, q


def _sin_squares(p: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    """``sin^2(pi r/q)`` and ``sin^2(pi r p/q)`` for ``r = 1..q-1``.

    Arguments are reduced to ``[0, pi/2]`` through ``min(r, q - r)`` so that
    values near ``r = q`` keep full relative precision.
    """
    r = np.arange(1, q, dtype=np.int64)
    s = (r * p) % q
    a = np.sin(math.pi * np.minimum(r, q - r) / q)
    b = np.sin(math.pi * np.minimum(s, q - s) / q)
    return a * a, b * b


def trig_sum(p: int, q: int) -> float:
    """``sum_{r=1}^{q-1} 1 / (sin^2(pi r/q) sin^2(pi r p/q))``."""
    p, q = _check_pq(p, q)
    if q == 1:
        return 0.0
    a, b = _sin_squares(p, q)
    return math.fsum(1.0 / (a * b))


def cos_trig_sum(p: int, q: int) -> float:
    """``sum_{r=1}^{q-1} (1 + 2 cos^2(pi r p/q)) / (sin^2(pi r/q) sin^2(pi r p/q))``."""
    p, q = _check_pq(p, q)
    if q == 1:
        return 0.0
    a, b = _sin_squares(p, q)
    return math.fsum((3.0 - 2.0 * b) / (a * b))


@dataclass(frozen=True)
class LatticeClosedForm:
    """Trigonometric-sum evaluation of the three squared discrepancies."""

    p: int
    q: int
    trig_sum: float
    cos_trig_sum: float
    dedekind: float
    standard_sq: float
    extreme_sq: float
    periodic_sq: float

    def values(self) -> dict:
        return {"standard": self.standard_sq, "extreme": self.extreme_sq, "periodic": self.periodic_sq}


def lattice_closed_form(p: int, q: int) -> LatticeClosedForm:
    """Squared discrepancies of the rational lattice with parameters ``(p, q)``.

    Raises
    ------
    NonCoprime
        If ``gcd(p, q) != 1``; the sine in the denominator would vanish.
    """
    p, q = _check_pq(p, q)
    t = trig_sum(p, q)
    c = cos_trig_sum(p, q)
    ded = dedekind_sum(p, q, exact=True)
    q2 = q * q
    # rational parts are split off and added exactly
    standard = math.fsum(
        [c / (16.0 * q2), float((ded + Fraction(3, 4)) ** 2 + Fraction(1, 18) - Fraction(1, 144 * q2))]
    )
    extreme = math.fsum([t / (16.0 * q2), float(Fraction(1, 72) - Fraction(1, 144 * q2))])
    periodic = math.fsum([t / (4.0 * q2), float(Fraction(1, 9) + Fraction(1, 36 * q2))])
    return LatticeClosedForm(p, q, t, c, float(ded), standard, extreme, periodic)


def _residue_sums(q: int, K: int) -> np.ndarray:
    """``T[c] = sum_{0 < |k| <= K, k = c mod q} 1/k^2``."""
    k = np.arange(1, K + 1, dtype=np.int64)
    w = 1.0 / (k.astype(np.float64) ** 2)
    pos = np.bincount(k % q, weights=w, minlength=q)
    neg = np.bincount((-k) % q, weights=w, minlength=q)
    return pos + neg


def bilyk_identity(p: int, q: int, K: int) -> tuple[float, float, float]:
    """Both sides of the lattice double-sum identity.

    The left side is ``sum 1/(k1^2 k2^2)`` over nonzero ``k1, k2`` in
    ``[-K, K]``, both nonzero mod ``q`` and with ``k1 + k2 p = 0 mod q``. It
    factorizes over residues: with ``s = -r p mod q`` it equals
    ``sum_r T(r) T(s)``. The right side is ``pi^4/q^4`` times
    :func:`trig_sum`.

    Returns
    -------
    lhs_truncated, rhs, tail_bound
        ``|lhs_truncated - rhs| <= tail_bound`` holds, using
        ``sum_{|k| > K} 1/k^2 <= 2/K`` for each truncated factor.
    """
    p, q = _check_pq(p, q)
    if q < 2:
        raise BadParams("the identity needs q >= 2")
    if K < q:
        raise BadParams(f"K must be >= q, got K = {K} < q = {q}")
    T = _residue_sums(q, int(K))
    r = np.arange(1, q, dtype=np.int64)
    s = (-r * p) % q
    lhs = math.fsum(T[r] * T[s])
    rhs = math.pi**4 / q**4 * trig_sum(p, q)
    e = 2.0 / K
    tail = math.fsum(e * (T[s] + e) + T[r] * e)
    return lhs, rhs, tail


def fibonacci_trig_ratio(n: int) -> float:
    """``trig_sum(F_{n-1}, F_n) / F_n^2``, which grows like a constant times ``n``."""
    if n < 1:
        raise BadParams(f"n must be >= 1, got {n}")
    q = fibonacci(n)
    return trig_sum(fibonacci(n - 1), q) / q**2


def fibonacci_slope_constant() -> float:
    """``4 / (15 sqrt 5)``, the growth rate of :func:`fibonacci_trig_ratio`."""
    return 4.0 / (15.0 * math.sqrt(5.0))


def eta_constant() -> float:
    """``sqrt(1 / (60 sqrt 5 log(golden ratio)))``."""
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    return math.sqrt(1.0 / (60.0 * math.sqrt(5.0) * math.log(phi)))
