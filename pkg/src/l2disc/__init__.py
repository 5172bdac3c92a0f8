"""Standard, extreme and periodic L2 discrepancies of point sets.

Subpackages
-----------
numtheory
    Continued fractions, Fibonacci numbers, Dedekind sums.
pointset
    Hammersley sets, rational lattices, grids, shifts and the text format.
discrepancy
    Pair-sum, one-dimensional, spectral, cellwise-exact and Monte Carlo
    evaluators.
closedform
    Exact formulas for Hammersley sets, lattices and grids.
harness
    The ``l2disc`` command line.
"""

from . import closedform, discrepancy, numtheory, pointset
from .discrepancy import (
    DiscrepancyReport,
    cell_exact_sq,
    diaphony_truncated,
    evaluate,
    exact_l2_sq,
    l2_extreme_sq,
    l2_extreme_sq_1d,
    l2_periodic_sq,
    l2_periodic_sq_1d,
    l2_standard_sq,
    shift_average_digital,
    shift_average_geometric,
)
from .errors import L2DiscError
from .pointset import (
    DyadicShift,
    PointSet,
    digital_shift,
    fibonacci_lattice,
    geometric_shift,
    hammersley,
    random_pointset,
    rational_lattice,
    regular_grid,
)

__version__ = "0.1.0"

__all__ = [
    "DiscrepancyReport",
    "DyadicShift",
    "L2DiscError",
    "PointSet",
    "cell_exact_sq",
    "closedform",
    "diaphony_truncated",
    "digital_shift",
    "discrepancy",
    "evaluate",
    "exact_l2_sq",
    "fibonacci_lattice",
    "geometric_shift",
    "hammersley",
    "l2_extreme_sq",
    "l2_extreme_sq_1d",
    "l2_periodic_sq",
    "l2_periodic_sq_1d",
    "l2_standard_sq",
    "numtheory",
    "pointset",
    "random_pointset",
    "rational_lattice",
    "regular_grid",
    "shift_average_digital",
    "shift_average_geometric",
]
