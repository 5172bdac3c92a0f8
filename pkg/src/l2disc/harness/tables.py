"""Plot-ready CSV tables built from the closed forms."""

from __future__ import annotations

from .. import closedform as cf
from ..errors import BadParams, UnknownTable
from ..numtheory import fibonacci
from .suites import FIBONACCI_INDICES, _ints, _unknown


def table_hammersley(params: dict):
    """Closed-form values for ``H_m`` with the per-step growth of each column."""
    _unknown(params, {"m"})
    header = [
        "m",
        "N",
        "standard_sq",
        "extreme_sq",
        "periodic_sq",
        "digital_mean_sq",
        "periodic_slope",
        "extreme_slope",
        "per_over_extr",
    ]
    rows = []
    for m in _ints(params, "m", range(0, 13)):
        per = cf.hammersley_periodic_sq(m, exact=True)
        ext = cf.hammersley_extreme_sq(m, exact=True)
        if m >= 1:
            per_slope = per - cf.hammersley_periodic_sq(m - 1, exact=True)
            ext_slope = ext - cf.hammersley_extreme_sq(m - 1, exact=True)
        else:
            per_slope = ext_slope = ""
        rows.append(
            [
                m,
                2**m,
                cf.hammersley_standard_sq(m, exact=True),
                ext,
                per,
                cf.hammersley_digital_mean_sq(m, exact=True),
                per_slope,
                ext_slope,
                per / ext,
            ]
        )
    return header, rows


def table_fibonacci_slope(params: dict):
    """Normalized trigonometric sums along the Fibonacci lattices.

    ``slope`` is the increment of ``trig_sum / F_n^2`` from ``n - 1`` to
    ``n``; ``ratio_over_n`` divides by ``n`` instead and converges more
    slowly.
    """
    _unknown(params, {"n"})
    c = cf.fibonacci_slope_constant()
    header = [
        "n",
        "p",
        "q",
        "trig_sum",
        "normalized",
        "ratio_over_n",
        "slope",
        "constant",
        "slope_rel_dev",
        "extreme_sq",
        "periodic_sq",
    ]
    rows = []
    for n in _ints(params, "n", range(5, 26)):
        if n < 2:
            raise BadParams("the Fibonacci table starts at n = 2")
        p, q = fibonacci(n - 1), fibonacci(n)
        form = cf.lattice_closed_form(p, q)
        norm = form.trig_sum / q**2
        slope = norm - cf.fibonacci_trig_ratio(n - 1)
        rows.append(
            [n, p, q, form.trig_sum, norm, norm / n, slope, c, abs(slope / c - 1), form.extreme_sq, form.periodic_sq]
        )
    return header, rows


def table_grid_ratio(params: dict):
    """``per^2 / extr^2`` for planar grids, tending to 8."""
    _unknown(params, {"m", "d"})
    header = ["m", "d", "N", "periodic_sq", "extreme_sq", "ratio", "relation_residual"]
    rows = []
    for d in _ints(params, "d", 2):
        for m in _ints(params, "m", range(1, 1001)):
            per = cf.grid_periodic_sq(m, d, exact=True)
            ext = cf.grid_extreme_sq(m, d, exact=True)
            rows.append([m, d, m**d, per, ext, per / ext, cf.relation_residual(per, ext, m**d)])
    return header, rows


def table_ratio(params: dict):
    """``per^2 / extr^2`` across Hammersley sets, Fibonacci lattices and grids."""
    _unknown(params, set())
    header = ["family", "param", "N", "periodic_sq", "extreme_sq", "ratio"]
    rows = []
    for m in range(0, 13):
        per = cf.hammersley_periodic_sq(m, exact=True)
        ext = cf.hammersley_extreme_sq(m, exact=True)
        rows.append(["hammersley", f"m={m}", 2**m, per, ext, per / ext])
    for n in FIBONACCI_INDICES:
        form = cf.lattice_closed_form(fibonacci(n - 1), fibonacci(n))
        rows.append(["fibonacci", f"n={n}", form.q, form.periodic_sq, form.extreme_sq, form.periodic_sq / form.extreme_sq])
    for m in (1, 2, 4, 8, 16, 32, 64):
        per = cf.grid_periodic_sq(m, 2, exact=True)
        ext = cf.grid_extreme_sq(m, 2, exact=True)
        rows.append(["grid", f"m={m}", m * m, per, ext, per / ext])
    return header, rows


TABLES = {
    "hammersley": table_hammersley,
    "fibonacci_slope": table_fibonacci_slope,
    "grid_ratio": table_grid_ratio,
    "ratio": table_ratio,
}


def build_table(name: str, params: dict | None = None):
    try:
        fn = TABLES[name]
    except KeyError:
        raise UnknownTable(f"unknown table {name!r}; choose from {', '.join(TABLES)}") from None
    return fn(dict(params or {}))
