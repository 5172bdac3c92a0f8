from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from l2disc.discrepancy import KINDS, exact_l2_sq, l2_sq
from l2disc.errors import MethodUnsupportedForInput
from l2disc.pointset import PointSet, fibonacci_lattice, from_fractions, hammersley, random_pointset, regular_grid

from test_pairsum import fraction_pair_sum

F = Fraction


def test_examples():
    one = from_fractions([(0, 0)])
    assert exact_l2_sq(one, "standard") == F(11, 18)
    assert exact_l2_sq(one, "extreme") == F(1, 144)
    assert exact_l2_sq(one, "periodic") == F(5, 36)
    assert exact_l2_sq(hammersley(2), "standard") == F(887, 1152)
    assert exact_l2_sq(fibonacci_lattice(4), "periodic") == F(1081, 4500)
    assert exact_l2_sq(fibonacci_lattice(4), "extreme") == F(821, 18000)


def test_requires_metadata():
    with pytest.raises(MethodUnsupportedForInput):
        exact_l2_sq(random_pointset(3, 2, 0), "standard")


def test_unknown_kind():
    with pytest.raises(ValueError):
        exact_l2_sq(hammersley(1), "nope")


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 10), st.integers(1, 3), st.integers(1, 50), st.integers(0, 2**32 - 1))
def test_matches_fraction_oracle(n, d, q, seed):
    nums = np.random.default_rng(seed).integers(0, q, size=(n, d))
    P = PointSet(nums / q, nums, q)
    rows = [tuple(F(int(v), q) for v in r) for r in nums]
    for kind in KINDS:
        assert exact_l2_sq(P, kind) == fraction_pair_sum(rows, kind)


@pytest.mark.parametrize("P", [hammersley(9), fibonacci_lattice(14), regular_grid(11, 3)], ids=["H9", "fib14", "grid11"])
def test_float_evaluator_close(P):
    for kind in KINDS:
        exact = exact_l2_sq(P, kind)
        assert l2_sq(P, kind) == pytest.approx(float(exact), rel=1e-12)


def test_large_denominator_uses_object_ints():
    q = 2**40 + 15
    nums = np.array([[0, 1], [2**39, 2**38]], dtype=np.int64)
    P = PointSet(nums / q, nums, q)
    rows = [tuple(F(int(v), q) for v in r) for r in nums]
    for kind in KINDS:
        assert exact_l2_sq(P, kind) == fraction_pair_sum(rows, kind)
