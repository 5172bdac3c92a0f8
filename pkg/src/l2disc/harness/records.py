"""Verification records and CSV output."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from fractions import Fraction

RECORD_COLUMNS = (
    "suite",
    "params",
    "closed_form",
    "oracle",
    "abs_residual",
    "rel_residual",
    "tolerance",
    "pass",
)

MODES = ("either", "abs", "rel")
RELATIONS = ("eq", "le")


def fmt(value) -> str:
    """17 significant digits, enough to round-trip a double."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float, Fraction)):
        return "%.17g" % float(value)
    return str(value)


def format_params(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


@dataclass
class VerificationRecord:
    """One comparison of a closed form against an independent oracle.

    ``mode`` selects the pass rule: ``"either"`` passes when the absolute or
    the relative residual is within ``tolerance``, ``"abs"`` and ``"rel"``
    use only one of them. With ``relation="le"`` the record checks
    ``oracle <= closed_form`` and only an excess counts as residual.
    Residuals of two :class:`Fraction` inputs are formed exactly.
    """

    suite: str
    params: dict
    closed_form: float
    oracle: float
    tolerance: float
    mode: str = "either"
    relation: str = "eq"
    expected_fail: bool = False
    abs_residual: float = field(init=False)
    rel_residual: float = field(init=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.relation not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}")
        exact = all(isinstance(v, (Fraction, int)) for v in (self.closed_form, self.oracle))
        if exact:
            diff = Fraction(self.oracle) - Fraction(self.closed_form)
        else:
            diff = float(self.oracle) - float(self.closed_form)
        if self.relation == "le":
            diff = max(diff, 0)
        self.abs_residual = float(abs(diff))
        ref = abs(float(self.closed_form))
        if ref > 0:
            self.rel_residual = float(abs(diff) / abs(self.closed_form)) if exact else self.abs_residual / ref
        else:
            self.rel_residual = 0.0 if self.abs_residual == 0 else math.inf

    @property
    def passed(self) -> bool:
        a = self.abs_residual <= self.tolerance
        r = self.rel_residual <= self.tolerance
        if self.mode == "abs":
            return a
        if self.mode == "rel":
            return r
        return a or r

    @property
    def ok(self) -> bool:
        """Counts as success for the exit status (expected failures included)."""
        return self.passed or self.expected_fail

    def params_text(self) -> str:
        params = dict(self.params)
        if self.expected_fail:
            params["expected"] = "fail"
        return format_params(params)

    def row(self) -> list[str]:
        return [
            self.suite,
            self.params_text(),
            fmt(self.closed_form),
            fmt(self.oracle),
            fmt(self.abs_residual),
            fmt(self.rel_residual),
            fmt(self.tolerance),
            fmt(self.passed),
        ]


def write_records(records, stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(RECORD_COLUMNS)
    for r in records:
        w.writerow(r.row())


def write_rows(header, rows, stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])


def summarize(records) -> dict:
    """Counts of passes, unexpected failures and unexpected passes."""
    out = {"total": 0, "passed": 0, "failed": 0, "expected_fail": 0, "unexpected_pass": 0}
    for r in records:
        out["total"] += 1
        if r.expected_fail:
            out["expected_fail" if not r.passed else "unexpected_pass"] += 1
        elif r.passed:
            out["passed"] += 1
        else:
            out["failed"] += 1
    return out
