"""Exact formulas for Hammersley sets, rational lattices and regular grids."""

from .grid import grid_extreme_sq, grid_periodic_sq, relation_residual
from .hammersley import (
    MAX_DIRECT_M,
    HammersleySums,
    direct_hammersley_sums,
    hammersley_digital_mean_sq,
    hammersley_digital_mean_sq_mbit,
    hammersley_extreme_sq,
    hammersley_periodic_sq,
    hammersley_sq_from_sums,
    hammersley_standard_sq,
    hammersley_sums,
)
from .lattice import (
    LatticeClosedForm,
    bilyk_identity,
    cos_trig_sum,
    eta_constant,
    fibonacci_slope_constant,
    fibonacci_trig_ratio,
    lattice_closed_form,
    trig_sum,
)

__all__ = [
    "MAX_DIRECT_M",
    "HammersleySums",
    "LatticeClosedForm",
    "bilyk_identity",
    "cos_trig_sum",
    "direct_hammersley_sums",
    "eta_constant",
    "fibonacci_slope_constant",
    "fibonacci_trig_ratio",
    "grid_extreme_sq",
    "grid_periodic_sq",
    "hammersley_digital_mean_sq",
    "hammersley_digital_mean_sq_mbit",
    "hammersley_extreme_sq",
    "hammersley_periodic_sq",
    "hammersley_sq_from_sums",
    "hammersley_standard_sq",
    "hammersley_sums",
    "lattice_closed_form",
    "relation_residual",
    "trig_sum",
]
