import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from l2disc.closedform import (
    bilyk_identity,
    cos_trig_sum,
    eta_constant,
    fibonacci_slope_constant,
    fibonacci_trig_ratio,
    lattice_closed_form,
    relation_residual,
    trig_sum,
)
from l2disc.discrepancy import KINDS, exact_l2_sq, l2_sq
from l2disc.errors import BadParams, NonCoprime
from l2disc.numtheory import dedekind_sum, fibonacci
from l2disc.pointset import rational_lattice

F = Fraction


def mp_trig_sum(p, q, cos=False):
    with mpmath.workdps(50):
        total = mpmath.mpf(0)
        for r in range(1, q):
            a = mpmath.sin(mpmath.pi * r / q) ** 2
            b = mpmath.sin(mpmath.pi * r * p / q) ** 2
            num = 1 + 2 * mpmath.cos(mpmath.pi * r * p / q) ** 2 if cos else 1
            total += num / (a * b)
        return total


class TestTrigSums:
    def test_three_five(self):
        assert trig_sum(3, 5) == pytest.approx(64 / 5, rel=1e-14)
        with mpmath.workdps(50):
            assert abs(mp_trig_sum(3, 5) - mpmath.mpf(64) / 5) < mpmath.mpf(10) ** -45
        assert cos_trig_sum(3, 5) == pytest.approx(112 / 5, rel=1e-14)
        assert dedekind_sum(3, 5, exact=True) == 0

    def test_empty(self):
        assert trig_sum(1, 1) == 0.0 and cos_trig_sum(1, 1) == 0.0

    @pytest.mark.parametrize("p, q", [(1, 2), (5, 8), (377, 610), (987, 1597), (17, 999)])
    def test_against_mpmath(self, p, q):
        assert trig_sum(p, q) == pytest.approx(float(mp_trig_sum(p, q)), rel=1e-12)
        assert cos_trig_sum(p, q) == pytest.approx(float(mp_trig_sum(p, q, cos=True)), rel=1e-12)

    def test_noncoprime(self):
        with pytest.raises(NonCoprime):
            trig_sum(2, 4)
        with pytest.raises(NonCoprime):
            lattice_closed_form(3, 9)


class TestClosedForm:
    def test_three_five(self):
        f = lattice_closed_form(3, 5)
        assert f.extreme_sq == pytest.approx(821 / 18000, rel=1e-14)
        assert f.periodic_sq == pytest.approx(1081 / 4500, rel=1e-14)
        assert f.standard_sq == pytest.approx(0.673778, abs=5e-7)
        assert f.standard_sq == pytest.approx(l2_sq(rational_lattice(3, 5), "standard"), rel=1e-12)
        assert f.values()["periodic"] == f.periodic_sq

    def test_one_point(self):
        f = lattice_closed_form(1, 1)
        assert f.extreme_sq == pytest.approx(1 / 144, rel=1e-15)
        assert f.periodic_sq == pytest.approx(5 / 36, rel=1e-15)
        assert f.standard_sq == pytest.approx(11 / 18, rel=1e-15)

    def test_reduces_p(self):
        assert lattice_closed_form(8, 5).periodic_sq == lattice_closed_form(3, 5).periodic_sq

    @pytest.mark.parametrize("n", range(1, 17))
    def test_fibonacci_against_exact(self, n):
        p, q = fibonacci(n - 1), fibonacci(n)
        f = lattice_closed_form(p, q)
        P = rational_lattice(p, q)
        for kind in KINDS:
            assert f.values()[kind] == pytest.approx(float(exact_l2_sq(P, kind)), rel=1e-11)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(2, 400), st.integers(1, 10**6))
    def test_random_coprime(self, q, p):
        if math.gcd(p, q) != 1:
            p = 1
        f = lattice_closed_form(p, q)
        P = rational_lattice(p, q)
        for kind in KINDS:
            assert f.values()[kind] == pytest.approx(l2_sq(P, kind), rel=1e-9)
        assert abs(relation_residual(f.periodic_sq, f.extreme_sq, q)) < 1e-12


class TestIdentity:
    @pytest.mark.parametrize("p, q", [(3, 5), (8, 13), (1, 2)])
    def test_bracket(self, p, q):
        lhs, rhs, tail = bilyk_identity(p, q, 10**4)
        assert lhs > 0 and rhs > 0
        assert abs(lhs - rhs) <= tail
        assert tail < 1e-2 * rhs

    def test_rhs_value(self):
        _, rhs, _ = bilyk_identity(3, 5, 5000)
        assert rhs == pytest.approx(math.pi**4 / 625 * 64 / 5, rel=1e-14)

    def test_brute_force_lhs(self):
        p, q, K = 3, 5, 40
        k = np.arange(-K, K + 1)
        k = k[(k != 0) & (k % q != 0)]
        k1, k2 = np.meshgrid(k, k, indexing="ij")
        mask = (k1 + k2 * p) % q == 0
        direct = math.fsum((1.0 / (k1[mask] ** 2 * k2[mask] ** 2.0)).ravel())
        lhs, _, _ = bilyk_identity(p, q, K)
        assert lhs == pytest.approx(direct, rel=1e-13)

    def test_preconditions(self):
        with pytest.raises(BadParams):
            bilyk_identity(3, 5, 4)
        with pytest.raises(BadParams):
            bilyk_identity(0, 1, 10)
        with pytest.raises(NonCoprime):
            bilyk_identity(2, 4, 10)


class TestConstants:
    def test_values(self):
        assert fibonacci_slope_constant() == pytest.approx(0.1192569588, abs=1e-10)
        assert fibonacci_slope_constant() == 4 / (15 * math.sqrt(5))
        assert eta_constant() == pytest.approx(0.124455, abs=1e-6)
        assert 2 * eta_constant() == pytest.approx(0.248910, abs=1e-6)

    def test_slope_at_25(self):
        c = fibonacci_slope_constant()
        slope = fibonacci_trig_ratio(25) - fibonacci_trig_ratio(24)
        assert abs(slope / c - 1) < 0.02
        assert abs(fibonacci_trig_ratio(25) / 25 / c - 1) < 0.02

    def test_ratio_definition(self):
        assert fibonacci_trig_ratio(4) == pytest.approx(64 / 5 / 25, rel=1e-14)
        with pytest.raises(BadParams):
            fibonacci_trig_ratio(0)
