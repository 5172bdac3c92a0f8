import warnings
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from l2disc.discrepancy import (
    KINDS,
    clamp_nonnegative,
    l2_extreme_sq,
    l2_periodic_sq,
    l2_sq,
    l2_standard_sq,
)
from l2disc.discrepancy.pairsum import standard_sq_batch
from l2disc.errors import EmptyPointSet, NegativeDiscrepancy
from l2disc.pointset import (
    PointSet,
    fibonacci_lattice,
    from_fractions,
    geometric_shift,
    hammersley,
    random_pointset,
    regular_grid,
)

F = Fraction


def fraction_pair_sum(rows, kind):
    """Direct rational evaluation of the pair formulas, for tiny sets."""
    n, d = len(rows), len(rows[0])
    total = F(0)
    if kind == "standard":
        total += F(n * n, 3**d)
        for x in rows:
            prod = F(1)
            for v in x:
                prod *= 1 - v * v
            total -= F(n, 2 ** (d - 1)) * prod
        for x in rows:
            for y in rows:
                prod = F(1)
                for a, b in zip(x, y):
                    prod *= 1 - max(a, b)
                total += prod
    elif kind == "extreme":
        total += F(n * n, 12**d)
        for x in rows:
            prod = F(1)
            for v in x:
                prod *= v * (1 - v)
            total -= F(n, 2 ** (d - 1)) * prod
        for x in rows:
            for y in rows:
                prod = F(1)
                for a, b in zip(x, y):
                    prod *= min(a, b) - a * b
                total += prod
    else:
        total -= F(n * n, 3**d)
        for x in rows:
            for y in rows:
                prod = F(1)
                for a, b in zip(x, y):
                    t = abs(a - b)
                    prod *= F(1, 2) - t + t * t
                total += prod
    return total


ONE = from_fractions([(0, 0)])


@pytest.mark.parametrize(
    "P, kind, value",
    [
        (ONE, "standard", F(11, 18)),
        (hammersley(2), "standard", F(887, 1152)),
        (ONE, "extreme", F(1, 144)),
        (hammersley(1), "extreme", F(1, 36)),
        (ONE, "periodic", F(5, 36)),
        (hammersley(1), "periodic", F(13, 72)),
        (fibonacci_lattice(4), "periodic", F(1081, 4500)),
        (fibonacci_lattice(4), "extreme", F(821, 18000)),
    ],
)
def test_examples(P, kind, value):
    assert l2_sq(P, kind) == pytest.approx(float(value), rel=1e-14)


@pytest.mark.parametrize("m", [1, 2, 5, 40])
def test_one_dim_grid_extreme(m):
    assert l2_extreme_sq(regular_grid(m, 1)) == pytest.approx(1 / 12, rel=1e-12)


def test_grid_2_1_standard_matches_fractions():
    rows = [(F(0),), (F(1, 2),)]
    assert l2_standard_sq(regular_grid(2, 1)) == pytest.approx(float(fraction_pair_sum(rows, "standard")), rel=1e-14)


def test_wrappers_match_dispatch():
    P = random_pointset(30, 3, 1)
    assert l2_standard_sq(P) == l2_sq(P, "standard")
    assert l2_extreme_sq(P) == l2_sq(P, "extreme")
    assert l2_periodic_sq(P) == l2_sq(P, "periodic")


def test_bad_arguments():
    with pytest.raises(ValueError):
        l2_sq(ONE, "diagonal")
    with pytest.raises(ValueError):
        l2_sq(ONE, "standard", summation="kahan-ish")
    with pytest.raises(EmptyPointSet):
        l2_sq(np.zeros((0, 2)), "standard")


def test_accepts_arrays():
    assert l2_sq(np.array([[0.0, 0.0]]), "periodic") == pytest.approx(5 / 36, rel=1e-15)


class TestClamp:
    def test_positive_unchanged(self):
        assert clamp_nonnegative(0.25) == 0.25

    def test_tiny_negative(self):
        with pytest.warns(RuntimeWarning):
            assert clamp_nonnegative(-1e-14) == 0.0

    def test_large_negative(self):
        with pytest.raises(NegativeDiscrepancy):
            clamp_nonnegative(-1e-6)

    def test_single_centre_point_periodic_nonnegative(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert l2_periodic_sq(PointSet([[0.5, 0.5]])) == pytest.approx(5 / 36, rel=1e-14)


small_sets = st.builds(
    lambda n, d, s: (n, d, s), st.integers(1, 9), st.integers(1, 3), st.integers(0, 2**32 - 1)
)


@settings(max_examples=40, deadline=None)
@given(small_sets)
def test_matches_rational_oracle(params):
    n, d, seed = params
    rng = np.random.default_rng(seed)
    nums = rng.integers(0, 64, size=(n, d))
    P = PointSet(nums / 64)
    rows = [tuple(F(int(v), 64) for v in r) for r in nums]
    for kind in KINDS:
        exact = fraction_pair_sum(rows, kind)
        got = l2_sq(P, kind)
        assert abs(F(got) - exact) <= F(1, 10**13) * max(exact, F(1, 10**3))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 64), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_ordering(n, d, seed):
    P = random_pointset(n, d, seed)
    e = l2_extreme_sq(P)
    assert e <= l2_standard_sq(P) + 1e-12
    assert e <= l2_periodic_sq(P) + 1e-12


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 40), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_permutation_invariance(n, d, seed):
    P = random_pointset(n, d, seed)
    perm = np.random.default_rng(seed).permutation(n)
    Q = PointSet(P.points[perm])
    for kind in KINDS:
        assert l2_sq(Q, kind) == pytest.approx(l2_sq(P, kind), rel=1e-12, abs=1e-15)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 40), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_torus_invariance(n, d, seed):
    P = random_pointset(n, d, seed)
    delta = np.random.default_rng(seed + 1).random(d)
    shifted = geometric_shift(P, delta)
    assert l2_periodic_sq(shifted) == pytest.approx(l2_periodic_sq(P), rel=1e-10, abs=1e-14)


def test_threads_and_naive_agree():
    P = random_pointset(3000, 2, 11)
    for kind in KINDS:
        base = l2_sq(P, kind, threads=1)
        assert l2_sq(P, kind, threads=1) == base
        assert l2_sq(P, kind, threads=4) == pytest.approx(base, rel=1e-13)
        assert l2_sq(P, kind, summation="naive") == pytest.approx(base, rel=1e-9)


def test_threads_from_environment(monkeypatch):
    P = random_pointset(500, 2, 2)
    base = l2_sq(P, "periodic", threads=1)
    monkeypatch.setenv("L2DISC_THREADS", "3")
    assert l2_sq(P, "periodic") == pytest.approx(base, rel=1e-13)


def test_batch_matches_single():
    rng = np.random.default_rng(4)
    x = rng.random((5, 17, 2))
    batch = standard_sq_batch(x)
    for b in range(5):
        assert batch[b] == pytest.approx(l2_standard_sq(PointSet(x[b])), rel=1e-12)


@pytest.mark.parametrize("m", [0, 3, 7])
def test_hammersley_is_swap_symmetric(m):
    P = hammersley(m)
    Q = PointSet(P.points[:, ::-1])
    for kind in KINDS:
        assert l2_sq(Q, kind) == pytest.approx(l2_sq(P, kind), rel=1e-13)
