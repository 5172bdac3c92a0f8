from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from l2disc.errors import (
    DimensionMismatch,
    EmptyPointSet,
    InexactDyadicRepresentation,
    IntegerOverflow,
    NonPositiveModulus,
    OutOfRange,
    ParseError,
)
from l2disc.numtheory import fibonacci
from l2disc.pointset import (
    DyadicShift,
    PointSet,
    digital_shift,
    fibonacci_lattice,
    format_pointset,
    from_fractions,
    geometric_shift,
    hammersley,
    parse_pointset,
    random_pointset,
    rational_lattice,
    read_pointset,
    regular_grid,
    van_der_corput,
    write_pointset,
)

F = Fraction


def as_set(P):
    return set(map(tuple, P.fractions()))


def frac_set(rows):
    return {tuple(F(v) for v in row) for row in rows}


class TestPointSet:
    def test_reshapes_1d(self):
        P = PointSet([0.0, 0.5])
        assert P.points.shape == (2, 1)
        assert P.dim == 1 and P.n_points == 2 and len(P) == 2

    @pytest.mark.parametrize("bad", [[1.0], [-0.1], [np.nan], [[0.2, 1.0]]])
    def test_out_of_range(self, bad):
        with pytest.raises(OutOfRange):
            PointSet(bad)

    def test_empty(self):
        with pytest.raises(EmptyPointSet):
            PointSet(np.zeros((0, 2)))

    def test_immutable(self):
        P = hammersley(2)
        with pytest.raises(ValueError):
            P.points[0, 0] = 0.5

    def test_metadata_pairing(self):
        with pytest.raises(ValueError):
            PointSet([0.5], numerators=[1])


class TestVanDerCorput:
    @pytest.mark.parametrize("k, value", [(0, 0), (1, F(1, 2)), (2, F(1, 4)), (3, F(3, 4)), (6, F(3, 8))])
    def test_values(self, k, value):
        assert van_der_corput(k) == value

    def test_negative(self):
        with pytest.raises(OutOfRange):
            van_der_corput(-1)

    @given(st.integers(0, 2**40))
    def test_digit_reversal(self, k):
        digits = bin(k)[2:][::-1]
        expected = sum(F(int(b), 2 ** (i + 1)) for i, b in enumerate(digits))
        assert F(van_der_corput(k)) == expected


class TestHammersley:
    def test_small(self):
        assert as_set(hammersley(0)) == {(0, 0)}
        assert as_set(hammersley(1)) == frac_set([(0, 0), ("1/2", "1/2")])
        assert as_set(hammersley(2)) == frac_set([(0, 0), ("1/4", "1/2"), ("1/2", "1/4"), ("3/4", "3/4")])

    @pytest.mark.parametrize("m", range(0, 11))
    def test_structure(self, m):
        P = hammersley(m)
        n = 2**m
        assert P.denominator == n
        np.testing.assert_array_equal(P.numerators[:, 0], np.arange(n))
        assert [F(v) for v in P.points[:, 1]] == [F(van_der_corput(k)) for k in range(n)]
        swapped = {(b, a) for a, b in as_set(P)}
        assert swapped == as_set(P)

    def test_errors(self):
        with pytest.raises(OutOfRange):
            hammersley(-1)
        with pytest.raises(IntegerOverflow):
            hammersley(60)


class TestLattices:
    def test_examples(self):
        assert as_set(rational_lattice(3, 5)) == frac_set(
            [(0, 0), ("1/5", "3/5"), ("2/5", "1/5"), ("3/5", "4/5"), ("4/5", "2/5")]
        )
        assert as_set(rational_lattice(1, 1)) == {(0, 0)}
        assert as_set(rational_lattice(1, 4)) == frac_set([(0, 0), ("1/4", "1/4"), ("1/2", "1/2"), ("3/4", "3/4")])

    def test_reduces_p(self):
        assert rational_lattice(8, 5).same_points(rational_lattice(3, 5))

    def test_noncoprime_warns(self):
        with pytest.warns(UserWarning):
            rational_lattice(2, 4)

    def test_bad_modulus(self):
        with pytest.raises(NonPositiveModulus):
            rational_lattice(1, 0)

    def test_fibonacci(self):
        assert fibonacci_lattice(4).same_points(rational_lattice(3, 5))
        assert as_set(fibonacci_lattice(1)) == {(0, 0)}
        P = fibonacci_lattice(6)
        assert P.n_points == 13
        np.testing.assert_array_equal(P.numerators[:, 1], (np.arange(13) * 8) % 13)
        with pytest.raises(OutOfRange):
            fibonacci_lattice(0)

    @given(st.integers(1, 400), st.integers(0, 1000))
    def test_exact_multiples(self, q, p):
        P = rational_lattice(p, q) if np.gcd(p, q) == 1 else rational_lattice(1, q)
        assert P.denominator == q
        np.testing.assert_array_equal(P.points, P.numerators / q)


class TestGrid:
    def test_examples(self):
        assert as_set(regular_grid(1, 2)) == {(0, 0)}
        assert regular_grid(2, 1).points.ravel().tolist() == [0.0, 0.5]
        G = regular_grid(3, 2)
        assert G.n_points == 9
        assert G.fractions()[:4] == [(0, 0), (0, F(1, 3)), (0, F(2, 3)), (F(1, 3), 0)]

    def test_errors(self):
        with pytest.raises(OutOfRange):
            regular_grid(0, 2)
        with pytest.raises(IntegerOverflow):
            regular_grid(10**6, 3)


class TestRandom:
    def test_determinism(self):
        assert random_pointset(100, 2, 42).same_points(random_pointset(100, 2, 42))
        assert not random_pointset(100, 2, 42).same_points(random_pointset(100, 2, 43))

    def test_single(self):
        P = random_pointset(1, 1, 7)
        assert 0 <= P.points[0, 0] < 1

    def test_means(self):
        P = random_pointset(10**4, 2, 3)
        assert np.all(np.abs(P.points.mean(axis=0) - 0.5) < 0.02)


class TestGeometricShift:
    def test_examples(self):
        H1 = hammersley(1)
        assert as_set(geometric_shift(H1, [0.5, 0.5])) == as_set(H1)
        assert geometric_shift(H1, [0.5, 0.5]).points.tolist() == [[0.5, 0.5], [0.0, 0.0]]
        P = random_pointset(5, 3, 1)
        assert geometric_shift(P, [0, 0, 0]).same_points(P)
        assert geometric_shift(PointSet([0.75]), [0.5]).points.tolist() == [[0.25]]

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            geometric_shift(hammersley(1), [0.5])

    @given(st.integers(0, 2**32), st.floats(0, 1, exclude_max=True), st.floats(0, 1, exclude_max=True))
    def test_group_action(self, seed, a, b):
        P = random_pointset(6, 2, seed)
        back = geometric_shift(geometric_shift(P, [a, b]), [(1 - a) % 1, (1 - b) % 1])
        diff = np.abs(back.points - P.points)
        # equal on the torus up to rounding
        assert np.all(np.minimum(diff, 1 - diff) < 1e-15)

    def test_never_reaches_one(self):
        P = PointSet([1 - 2**-53])
        assert geometric_shift(P, [2**-54]).points[0, 0] < 1


class TestDyadicShift:
    def test_digits_and_values(self):
        s = DyadicShift.from_digits([[0, 1], [1, 1]])
        assert s.ints == (1, 3) and s.precision == 2
        assert s.digits == ((0, 1), (1, 1))
        assert s.values == (F(1, 4), F(3, 4))

    def test_invalid(self):
        with pytest.raises(OutOfRange):
            DyadicShift((4,), 2)
        with pytest.raises(OutOfRange):
            DyadicShift.from_digits([[0, 2]])
        with pytest.raises(DimensionMismatch):
            DyadicShift.from_digits([[0, 1], [1]])

    @given(st.integers(1, 130), st.integers(0, 2**32))
    def test_random_range(self, w, seed):
        s = DyadicShift.random(3, w, np.random.default_rng(seed))
        assert all(0 <= v <= 2**w - 1 for v in s.ints)


class TestDigitalShift:
    def test_examples(self):
        H1 = hammersley(1)
        out = digital_shift(H1, DyadicShift.from_digits([[1], [1]]))
        assert out.points.tolist() == [[0.5, 0.5], [0.0, 0.0]]
        assert digital_shift(H1, DyadicShift.zeros(2)).same_points(H1)
        # 11 xor 01 = 10 and 01 xor 01 = 00
        P = from_fractions([("3/4", "1/4")])
        out = digital_shift(P, DyadicShift.from_digits([[0, 1], [0, 1]]))
        assert out.fractions() == [(F(1, 2), F(0))]

    def test_inexact(self):
        with pytest.raises(InexactDyadicRepresentation):
            digital_shift(rational_lattice(3, 5), DyadicShift.zeros(2, 8))
        with pytest.raises(InexactDyadicRepresentation):
            digital_shift(hammersley(4), DyadicShift.zeros(2, 3))

    def test_truncate_keeps_tail(self):
        P = PointSet([0.3])
        out = digital_shift(P, DyadicShift((1,), 1), truncate=True)
        assert out.points[0, 0] == pytest.approx(0.8, abs=1e-16)

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            digital_shift(hammersley(1), DyadicShift.zeros(3))

    def test_keeps_exact_metadata(self):
        out = digital_shift(hammersley(3), DyadicShift.from_digits([[1, 0, 1], [0, 1, 1]]))
        assert out.is_exact and out.denominator == 8

    @pytest.mark.parametrize("w", [4, 20, 53, 64, 100])
    def test_involution(self, w):
        rng = np.random.default_rng(w)
        P = hammersley(4)
        s = DyadicShift.random(2, w, rng)
        once = digital_shift(P, s)
        assert np.all(once.points < 1)
        twice = digital_shift(once, s, truncate=w > 53)
        if w <= 53:
            assert twice.same_points(P)
        else:
            # rounding toward zero beyond 53 bits loses < 2^-53 per coordinate
            np.testing.assert_allclose(twice.points, P.points, atol=2**-52)

    @given(st.integers(0, 2**32), st.integers(1, 53))
    def test_involution_property(self, seed, w):
        rng = np.random.default_rng(seed)
        ints = rng.integers(0, 2**w, size=(5, 2), dtype=np.uint64)
        P = PointSet(np.ldexp(ints.astype(np.float64), -w))
        s = DyadicShift.random(2, w, rng)
        assert digital_shift(digital_shift(P, s), s).same_points(P)


class TestTextFormat:
    def test_header_and_lines(self):
        text = format_pointset(hammersley(2))
        lines = text.splitlines()
        assert lines[0] == "# d=2 N=4"
        assert len(lines) == 5
        assert format_pointset(fibonacci_lattice(1)).splitlines()[1] == "0 0"

    @pytest.mark.parametrize(
        "P", [hammersley(6), rational_lattice(377, 610), random_pointset(50, 3, 9), regular_grid(7, 2)]
    )
    def test_round_trip(self, P, tmp_path):
        path = tmp_path / "p.txt"
        write_pointset(P, path)
        assert read_pointset(path).same_points(P)

    @pytest.mark.parametrize(
        "text",
        ["", "0 0\n", "# d=2 N=2\n0 0\n", "# d=2 N=1\n0 x\n", "# d=2 N=1\n0\n", "# d=1 N=1\n1.5\n"],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_pointset(text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            read_pointset(tmp_path / "nope.txt")

    def test_fibonacci_sizes_round_trip(self):
        for n in range(1, 17):
            P = fibonacci_lattice(n)
            assert parse_pointset(format_pointset(P)).same_points(P)
            assert P.n_points == fibonacci(n)
