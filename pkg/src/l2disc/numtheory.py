"""Continued fractions, Fibonacci numbers, and the small special functions
(sawtooth, inhomogeneous Dedekind sum, second Bernoulli polynomial) used by
the lattice and one-dimensional formulas."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    EmptyQuotients,
    IntegerOverflow,
    NonPositiveModulus,
    NonPositiveQuotient,
    OutOfRange,
)

# Largest integer the exact point-set metadata (int64) can carry.
INT_MAX = 2**63 - 1

# Above this modulus the Dedekind sum falls back to floating point.
DEDEKIND_EXACT_LIMIT = 10**6


@dataclass(frozen=True)
class ConvergentSequence:
    """Partial quotients ``a_0..a_n`` and the convergents ``p_k/q_k``."""

    quotients: tuple[int, ...]
    convergents: tuple[tuple[int, int], ...]

    @property
    def final(self) -> tuple[int, int]:
        return self.convergents[-1]

    def __len__(self) -> int:
        return len(self.convergents)


def convergents(quotients) -> ConvergentSequence:
    """Convergents of ``[a_0; a_1, ..., a_n]`` by the three-term recurrence.

    Raises
    ------
    EmptyQuotients
        If no quotients are given.
    NonPositiveQuotient
        If ``a_0 < 0`` or ``a_k < 1`` for some ``k >= 1``.
    IntegerOverflow
        If a numerator or denominator leaves the int64 range.
    """
    quotients = tuple(int(a) for a in quotients)
    if not quotients:
        raise EmptyQuotients("at least one partial quotient is required")
    if quotients[0] < 0:
        raise NonPositiveQuotient(f"a_0 must be non-negative, got {quotients[0]}")
    for k, a in enumerate(quotients[1:], start=1):
        if a < 1:
            raise NonPositiveQuotient(f"a_{k} must be >= 1, got {a}")

    p_prev2, q_prev2 = 0, 1
    p_prev, q_prev = 1, 0
    out = []
    for a in quotients:
        p = a * p_prev + p_prev2
        q = a * q_prev + q_prev2
        if p > INT_MAX or q > INT_MAX:
            raise IntegerOverflow(f"convergent {len(out)} exceeds int64 range")
        out.append((p, q))
        p_prev2, q_prev2, p_prev, q_prev = p_prev, q_prev, p, q
    return ConvergentSequence(quotients, tuple(out))


def fibonacci(n: int) -> int:
    """``F_0 = F_1 = 1`` and ``F_n = F_{n-1} + F_{n-2}``."""
    if n < 0:
        raise OutOfRange(f"Fibonacci index must be >= 0, got {n}")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
        if a > INT_MAX:
            raise IntegerOverflow(f"F_{n} exceeds int64 range")
    return a


def rho(x: float) -> float:
    """Sawtooth ``1/2 - {x}``. Exact when given a ``Fraction``."""
    if isinstance(x, Fraction):
        return Fraction(1, 2) - (x - math.floor(x))
    return 0.5 - (x - math.floor(x))


def dedekind_sum(p: int, q: int, exact: bool = False):
    """Inhomogeneous Dedekind sum ``sum_{k=1}^{q-1} rho(k/q) rho(kp/q)``.

    Every term is ``(q - 2k)(q - 2(kp mod q)) / (4q^2)``, so the sum is an
    integer over ``4q^2`` and is accumulated exactly for ``q <= 10**6``.
    Returns a ``Fraction`` when ``exact`` is set, otherwise a float.
    """
    if q < 1:
        raise NonPositiveModulus(f"modulus must be >= 1, got {q}")
    if q == 1:
        return Fraction(0) if exact else 0.0
    if q <= DEDEKIND_EXACT_LIMIT:
        k = np.arange(1, q, dtype=np.int64)
        s = (k * (p % q)) % q
        # |terms| <= q^2 and there are < q of them: fits int64 for q <= 1e6
        total = int(np.sum((q - 2 * k) * (q - 2 * s)))
        value = Fraction(total, 4 * q * q)
        return value if exact else float(value)
    if exact:
        raise OutOfRange(f"exact Dedekind sum only for q <= {DEDEKIND_EXACT_LIMIT}")
    k = np.arange(1, q, dtype=np.float64)
    s = ((np.arange(1, q, dtype=np.int64) * (p % q)) % q).astype(np.float64)
    return math.fsum((0.5 - k / q) * (0.5 - s / q))


def bernoulli2(x):
    """Second Bernoulli polynomial ``x^2 - x + 1/6`` on ``[0, 1]``."""
    if not 0 <= x <= 1:
        raise OutOfRange(f"bernoulli2 is defined here on [0, 1], got {x}")
    if isinstance(x, Fraction):
        return x * x - x + Fraction(1, 6)
    return x * x - x + 1.0 / 6.0
