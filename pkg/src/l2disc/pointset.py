"""Plane point sets (Hammersley, rational/Fibonacci lattices, regular grids,
uniform random) and the two shift operations used to randomize them.

Generators keep an exact integer description of their points next to the
float coordinates: ``points`` are the doubles nearest to
``numerators / denominator``. The exact evaluators in
:mod:`l2disc.discrepancy.exact` use the integers.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyPointSet,
    InexactDyadicRepresentation,
    IntegerOverflow,
    NonPositiveModulus,
    OutOfRange,
    ParseError,
)
from .numtheory import INT_MAX, fibonacci

# k/2^m is an exact double only up to 2^53
MAX_HAMMERSLEY_M = 53
MAX_POINTS = 2**53


@dataclass(frozen=True, eq=False)
class PointSet:
    """An ordered, immutable set of ``N`` points in ``[0, 1)^d``.

    Parameters
    ----------
    points : array_like, shape (N, d) or (N,)
        Coordinates. A 1-D array is read as ``N`` one-dimensional points.
    numerators, denominator : optional
        Exact description ``points = numerators / denominator``. Either both
        are given or neither.
    """

    points: np.ndarray
    numerators: np.ndarray | None = None
    denominator: int | None = None

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
        if pts.ndim != 2:
            raise DimensionMismatch(f"points must be (N, d), got shape {pts.shape}")
        if pts.shape[0] == 0:
            raise EmptyPointSet("a point set needs at least one point")
        if pts.shape[1] == 0:
            raise DimensionMismatch("dimension must be >= 1")
        if not np.all(np.isfinite(pts)) or np.any(pts < 0.0) or np.any(pts >= 1.0):
            raise OutOfRange("all coordinates must lie in [0, 1)")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

        if (self.numerators is None) != (self.denominator is None):
            raise ValueError("numerators and denominator must be given together")
        if self.numerators is not None:
            num = np.array(self.numerators, dtype=np.int64).reshape(pts.shape)
            den = int(self.denominator)
            if den < 1:
                raise NonPositiveModulus("denominator must be >= 1")
            if np.any(num < 0) or np.any(num >= den):
                raise OutOfRange("numerators must lie in [0, denominator)")
            num.setflags(write=False)
            object.__setattr__(self, "numerators", num)
            object.__setattr__(self, "denominator", den)

    @property
    def n_points(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @property
    def is_exact(self) -> bool:
        return self.numerators is not None

    def __len__(self) -> int:
        return self.n_points

    def __iter__(self):
        return iter(self.points)

    def fractions(self) -> list[tuple[Fraction, ...]]:
        """Coordinates as exact fractions (from metadata or the doubles)."""
        if self.is_exact:
            den = self.denominator
            return [tuple(Fraction(int(v), den) for v in row) for row in self.numerators]
        return [tuple(Fraction(float(v)) for v in row) for row in self.points]

    def same_points(self, other: "PointSet") -> bool:
        """Equality of the ordered coordinate lists."""
        return self.points.shape == other.points.shape and bool(
            np.array_equal(self.points, other.points)
        )

    def as_set(self) -> frozenset:
        return frozenset(map(tuple, self.points.tolist()))


def _exact(numerators: np.ndarray, denominator: int) -> PointSet:
    num = np.asarray(numerators, dtype=np.int64)
    return PointSet(num / float(denominator), num, denominator)


# --------------------------------------------------------------------------
# generators


def _bit_reverse(k: np.ndarray, m: int) -> np.ndarray:
    out = np.zeros_like(k)
    for i in range(m):
        out = (out << 1) | ((k >> i) & 1)
    return out


def van_der_corput(k: int) -> float:
    """Base-2 radical inverse: the binary digits of ``k`` mirrored about the
    binary point, e.g. ``6 = 110b -> 0.011b = 3/8``."""
    if k < 0:
        raise OutOfRange(f"van der Corput index must be >= 0, got {k}")
    if k == 0:
        return 0.0
    r = k.bit_length()
    rev = int(format(k, f"0{r}b")[::-1], 2)
    return math.ldexp(rev, -r)


def hammersley(m: int) -> PointSet:
    """The ``2^m``-point Hammersley set ``{(k/2^m, vdc(k))}`` in index order."""
    if m < 0:
        raise OutOfRange(f"m must be >= 0, got {m}")
    if m > MAX_HAMMERSLEY_M:
        raise IntegerOverflow(f"2^{m} points cannot be represented exactly")
    n = 1 << m
    k = np.arange(n, dtype=np.int64)
    return _exact(np.column_stack([k, _bit_reverse(k, m)]), n)


def rational_lattice(p: int, q: int) -> PointSet:
    """The rank-1 lattice ``{(k/q, {kp/q}) : k = 0..q-1}``.

    Second coordinates come from ``(k*p) mod q`` in integer arithmetic. A
    warning is issued when ``gcd(p, q) != 1`` since points then coincide in
    projection and the lattice closed forms do not apply.
    """
    if q < 1:
        raise NonPositiveModulus(f"modulus must be >= 1, got {q}")
    if q > MAX_POINTS or (q - 1) * (q - 1) > INT_MAX:
        raise IntegerOverflow(f"modulus {q} too large")
    p = p % q
    if math.gcd(p, q) != 1:
        warnings.warn(f"gcd({p}, {q}) != 1: lattice is degenerate", stacklevel=2)
    k = np.arange(q, dtype=np.int64)
    return _exact(np.column_stack([k, (k * p) % q]), q)


def fibonacci_lattice(n: int) -> PointSet:
    """Rational lattice with ``(p, q) = (F_{n-1}, F_n)``."""
    if n < 1:
        raise OutOfRange(f"Fibonacci lattice index must be >= 1, got {n}")
    q = fibonacci(n)
    return rational_lattice(fibonacci(n - 1) % q, q)


def regular_grid(m: int, d: int) -> PointSet:
    """``{0, 1/m, ..., (m-1)/m}^d`` in lexicographic order."""
    if m < 1 or d < 1:
        raise OutOfRange(f"need m >= 1 and d >= 1, got m={m}, d={d}")
    if m**d > MAX_POINTS:
        raise IntegerOverflow(f"{m}^{d} points is too many")
    idx = np.indices((m,) * d, dtype=np.int64).reshape(d, -1).T
    return _exact(idx, m)


def random_pointset(n: int, d: int, seed: int) -> PointSet:
    """``n`` i.i.d. uniform points from numpy's PCG64 seeded with ``seed``."""
    if n < 1 or d < 1:
        raise OutOfRange(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    rng = np.random.default_rng(int(seed) & (2**64 - 1))
    return PointSet(rng.random((n, d)))


def from_fractions(rows) -> PointSet:
    """Build an exact point set from rows of ``Fraction`` (or int/str) values."""
    rows = [tuple(Fraction(v) for v in row) for row in rows]
    den = 1
    for row in rows:
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
    if den > INT_MAX:
        return PointSet([[float(v) for v in row] for row in rows])
    num = [[int(v * den) for v in row] for row in rows]
    return _exact(np.array(num, dtype=np.int64), den)


# --------------------------------------------------------------------------
# shifts


def geometric_shift(pointset: PointSet, delta) -> PointSet:
    """Torus translation: every point becomes ``{x + delta}`` componentwise."""
    delta = np.asarray(delta, dtype=np.float64).reshape(-1)
    if delta.shape[0] != pointset.dim:
        raise DimensionMismatch(
            f"shift has dimension {delta.shape[0]}, point set has {pointset.dim}"
        )
    shifted = np.mod(pointset.points + delta, 1.0)
    # x + delta may round up to exactly 1.0 before the reduction
    shifted[shifted >= 1.0] = 0.0
    return PointSet(shifted)


@dataclass(frozen=True)
class DyadicShift:
    """A digital shift with ``precision`` binary digits per coordinate.

    ``ints[j]`` holds the digits of coordinate ``j`` as an integer, most
    significant digit first: the shift value is ``ints[j] / 2**precision``.
    """

    ints: tuple[int, ...]
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise OutOfRange("precision must be >= 1")
        if not self.ints:
            raise DimensionMismatch("a shift needs at least one coordinate")
        for v in self.ints:
            if not 0 <= v < (1 << self.precision):
                raise OutOfRange(f"shift integer {v} does not fit {self.precision} digits")

    @classmethod
    def from_digits(cls, digits) -> "DyadicShift":
        """Build from per-coordinate digit lists ``[d_1, d_2, ..., d_w]``."""
        digits = [list(map(int, ds)) for ds in digits]
        widths = {len(ds) for ds in digits}
        if len(widths) != 1:
            raise DimensionMismatch("all coordinates need the same number of digits")
        (w,) = widths
        ints = []
        for ds in digits:
            if any(b not in (0, 1) for b in ds):
                raise OutOfRange("digits must be 0 or 1")
            ints.append(int("".join(map(str, ds)), 2) if ds else 0)
        return cls(tuple(ints), w)

    @classmethod
    def zeros(cls, dim: int, precision: int = 64) -> "DyadicShift":
        return cls((0,) * dim, precision)

    @classmethod
    def random(cls, dim: int, precision: int, rng: np.random.Generator) -> "DyadicShift":
        return cls(tuple(_random_dyadic_ints(rng, dim, precision)), precision)

    @property
    def dim(self) -> int:
        return len(self.ints)

    @property
    def digits(self) -> tuple[tuple[int, ...], ...]:
        w = self.precision
        return tuple(tuple(int(b) for b in format(v, f"0{w}b")) for v in self.ints)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, 1 << self.precision) for v in self.ints)


def _random_dyadic_ints(rng: np.random.Generator, size, precision: int):
    if precision <= 64:
        hi = (1 << precision) - 1
        return rng.integers(0, hi, size=size, dtype=np.uint64, endpoint=True)
    # wider shifts are assembled from 64-bit words
    words = -(-precision // 64)
    n = int(np.prod(size))
    raw = rng.integers(0, 2**64 - 1, size=(n, words), dtype=np.uint64, endpoint=True)
    out = []
    for row in raw:
        v = 0
        for word in row:
            v = (v << 64) | int(word)
        out.append(v >> (64 * words - precision))
    return np.array(out, dtype=object).reshape(size)


def to_dyadic_ints(points: np.ndarray, precision: int, truncate: bool = False):
    """Integers ``X`` with ``X / 2**precision == points`` (``precision <= 64``).

    With ``truncate`` the digits beyond ``precision`` are dropped instead of
    raising :class:`InexactDyadicRepresentation`.
    """
    scaled = np.ldexp(np.asarray(points, dtype=np.float64), precision)
    floor = np.floor(scaled)
    if not truncate and np.any(floor != scaled):
        raise InexactDyadicRepresentation(
            f"coordinates are not dyadic rationals with {precision} digits"
        )
    return floor.astype(np.uint64)


def from_dyadic_ints(ints: np.ndarray, precision: int) -> np.ndarray:
    """``ints / 2**precision`` rounded toward zero to a double.

    Rounding toward zero keeps every coordinate strictly below one; the loss
    is below ``2**-53`` relative and only occurs for ``precision > 53``.
    """
    ints = np.asarray(ints, dtype=np.uint64)
    if precision > 53:
        _, exp = np.frexp(ints.astype(np.float64))
        drop = np.maximum(exp - 53, 0).astype(np.uint64)
        ints = (ints >> drop) << drop
    return np.ldexp(ints.astype(np.float64), -precision)


def digital_shift(pointset: PointSet, delta: DyadicShift, truncate: bool = False) -> PointSet:
    """Digit-wise XOR of every point with ``delta``.

    The first ``delta.precision`` binary digits of each coordinate are XOR-ed
    with the shift digits. Coordinates need an exact dyadic representation at
    that precision unless ``truncate`` is set, in which case digits beyond the
    precision are carried over unchanged.
    """
    if delta.dim != pointset.dim:
        raise DimensionMismatch(
            f"shift has dimension {delta.dim}, point set has {pointset.dim}"
        )
    w = delta.precision
    pts = pointset.points
    if w <= 64:
        x = to_dyadic_ints(pts, w, truncate=truncate)
        d = np.array(delta.ints, dtype=np.uint64)
        y = x ^ d
        out = from_dyadic_ints(y, w)
        if truncate:
            out = out + (pts - np.ldexp(x.astype(np.float64), -w))
            out[out >= 1.0] = np.nextafter(1.0, 0.0)
    else:
        out = np.empty_like(pts)
        for idx, v in np.ndenumerate(pts):
            fr = Fraction(float(v)) * (1 << w)
            if fr.denominator != 1 and not truncate:
                raise InexactDyadicRepresentation(
                    f"coordinate {v!r} is not a dyadic rational with {w} digits"
                )
            xi = math.floor(fr)
            yi = xi ^ delta.ints[idx[1]]
            out[idx] = float(Fraction(yi, 1 << w) + (fr - xi) / (1 << w))
            if out[idx] >= 1.0:
                out[idx] = np.nextafter(1.0, 0.0)

    num = den = None
    if pointset.is_exact and not truncate:
        den = pointset.denominator
        e = den.bit_length() - 1
        if den == 1 << e and e <= w <= 53:
            # exact metadata survives while the result is an exact double
            num = (x ^ d).astype(np.int64)
            den = 1 << w
            out = num / float(den)
        else:
            den = None
    return PointSet(out, num, den)


# --------------------------------------------------------------------------
# text format


_HEADER = re.compile(r"#\s*d\s*=\s*(\d+)\s+N\s*=\s*(\d+)\s*$")


def format_pointset(pointset: PointSet) -> str:
    lines = [f"# d={pointset.dim} N={pointset.n_points}"]
    for row in pointset.points:
        lines.append(" ".join(f"{float(v):.17g}" for v in row))
    return "\n".join(lines) + "\n"


def write_pointset(pointset: PointSet, path) -> None:
    Path(path).write_text(format_pointset(pointset))


def parse_pointset(text: str) -> PointSet:
    """Parse the ``# d=<d> N=<N>`` text format."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty point set file")
    match = _HEADER.match(lines[0])
    if match is None:
        raise ParseError(f"bad header line: {lines[0]!r}")
    d, n = int(match.group(1)), int(match.group(2))
    rows = []
    for lineno, ln in enumerate(lines[1:], start=2):
        if ln.startswith("#"):
            continue
        try:
            row = [float(tok) for tok in ln.split()]
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if len(row) != d:
            raise ParseError(f"line {lineno}: expected {d} coordinates, got {len(row)}")
        rows.append(row)
    if len(rows) != n:
        raise ParseError(f"header announces {n} points, found {len(rows)}")
    try:
        return PointSet(np.array(rows, dtype=np.float64).reshape(n, d))
    except (OutOfRange, EmptyPointSet) as exc:
        raise ParseError(str(exc)) from None


def read_pointset(path) -> PointSet:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_pointset(text)
