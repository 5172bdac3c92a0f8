"""Squared L2 discrepancies (standard, extreme, periodic) of point sets."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import BadParams, DimensionMismatch, MethodUnsupportedForInput
from ..pointset import PointSet
from .cells import MAX_CELL_POINTS, cell_exact_sq
from .exact import exact_l2_sq
from .oned import l2_extreme_sq_1d, l2_periodic_sq_1d
from .pairsum import (
    KINDS,
    NEGATIVE_SLACK,
    SUMMATIONS,
    THREADS_ENV,
    clamp_nonnegative,
    default_threads,
    l2_extreme_sq,
    l2_periodic_sq,
    l2_sq,
    l2_standard_sq,
)
from .shifts import (
    digital_shift_average_exhaustive,
    shift_average_digital,
    shift_average_geometric,
)
from .spectral import SpectralWeights, diaphony_truncated

METHODS = ("pair_sum", "one_dim_ordered", "spectral_truncated", "cell_exact", "shift_mc")


@dataclass
class DiscrepancyReport:
    """Squared discrepancies of one point set by one method.

    Unset kinds stay ``None``. ``truncation_k`` applies to the spectral
    method, ``mc_samples`` and the ``*_stderr`` fields to ``shift_mc``.
    """

    n_points: int
    dim: int
    method: str = "pair_sum"
    summation: str = "compensated"
    standard_sq: float | None = None
    extreme_sq: float | None = None
    periodic_sq: float | None = None
    truncation_k: int | None = None
    tail_bound: float | None = None
    mc_samples: int | None = None
    stderr: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.summation not in SUMMATIONS:
            raise ValueError(f"summation must be one of {SUMMATIONS}, got {self.summation!r}")
        for kind in KINDS:
            v = getattr(self, f"{kind}_sq")
            if v is not None:
                setattr(self, f"{kind}_sq", clamp_nonnegative(float(v), f"{kind} squared discrepancy"))

    def values(self) -> dict:
        return {k: getattr(self, f"{k}_sq") for k in KINDS if getattr(self, f"{k}_sq") is not None}

    def ordering_holds(self, tol: float = 1e-12) -> bool:
        """The extreme value is at most the standard and the periodic value."""
        e, s, p = self.extreme_sq, self.standard_sq, self.periodic_sq
        if e is None:
            return True
        return (s is None or e <= s + tol) and (p is None or e <= p + tol)


def evaluate(
    pointset,
    kinds=KINDS,
    method: str = "pair_sum",
    summation: str = "compensated",
    K: int | None = None,
    R: int | None = None,
    seed: int = 0,
    threads: int | None = None,
) -> DiscrepancyReport:
    """Compute the requested ``kinds`` of ``pointset`` with one ``method``.

    ``spectral_truncated`` only supports the periodic kind and ``shift_mc``
    estimates the periodic value as the mean over geometric shifts.
    """
    if not isinstance(pointset, PointSet):
        pointset = PointSet(pointset)
    kinds = tuple(kinds)
    for k in kinds:
        if k not in KINDS:
            raise BadParams(f"unknown kind {k!r}")
    if method not in METHODS:
        raise BadParams(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    report = DiscrepancyReport(pointset.n_points, pointset.dim, method, summation)

    if method == "pair_sum":
        for k in kinds:
            setattr(report, f"{k}_sq", l2_sq(pointset, k, summation, threads))
    elif method == "one_dim_ordered":
        if pointset.dim != 1:
            raise DimensionMismatch("one_dim_ordered needs d = 1")
        if "standard" in kinds:
            raise MethodUnsupportedForInput("one_dim_ordered has no standard variant")
        if "extreme" in kinds:
            report.extreme_sq = l2_extreme_sq_1d(pointset)
        if "periodic" in kinds:
            report.periodic_sq = l2_periodic_sq_1d(pointset)
    elif method == "spectral_truncated":
        if set(kinds) != {"periodic"}:
            raise MethodUnsupportedForInput("spectral_truncated only gives the periodic kind")
        if K is None:
            raise BadParams("spectral_truncated needs K")
        report.periodic_sq, report.tail_bound = diaphony_truncated(pointset, K)
        report.truncation_k = int(K)
    elif method == "cell_exact":
        for k in kinds:
            setattr(report, f"{k}_sq", cell_exact_sq(pointset, k))
    else:
        if set(kinds) != {"periodic"}:
            raise MethodUnsupportedForInput("shift_mc only estimates the periodic kind")
        if R is None:
            raise BadParams("shift_mc needs R")
        mean, err = shift_average_geometric(pointset, R, seed)
        report.periodic_sq = max(mean, 0.0)
        report.stderr["periodic"] = err
        report.mc_samples = int(R)
    return report


__all__ = [
    "KINDS",
    "MAX_CELL_POINTS",
    "METHODS",
    "NEGATIVE_SLACK",
    "SUMMATIONS",
    "THREADS_ENV",
    "DiscrepancyReport",
    "SpectralWeights",
    "cell_exact_sq",
    "clamp_nonnegative",
    "default_threads",
    "diaphony_truncated",
    "digital_shift_average_exhaustive",
    "evaluate",
    "exact_l2_sq",
    "l2_extreme_sq",
    "l2_extreme_sq_1d",
    "l2_periodic_sq",
    "l2_periodic_sq_1d",
    "l2_sq",
    "l2_standard_sq",
    "shift_average_digital",
    "shift_average_geometric",
]
