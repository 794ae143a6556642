import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import IDEAL_2PI3_PI6_PI6, V_OCT, V_TET, det_leibniz
from tilingvol import (
    AngleVector,
    DomainError,
    NumericalError,
    VertexKind,
    classify_vertices,
    criticality_residual,
    gram_matrix,
    ideal_volume_oracle,
    tiling_wedge_angles,
    volume,
)

PI = math.pi
REGULAR = AngleVector(*[PI / 3] * 6)
HALF_OCT_WEDGE = AngleVector(0, PI / 4, PI / 4, PI / 2, PI / 4, PI / 4)
QUARTER_OCT = AngleVector(PI / 2, PI / 4, PI / 4, PI / 2, PI / 4, PI / 4)

angles = st.floats(min_value=0, max_value=PI)


class TestAngleVector:
    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            AngleVector(0, 0, 0, 0, 0, 3.5)
        with pytest.raises(DomainError):
            AngleVector(-0.1, 0, 0, 0, 0, 0)

    def test_clamps_rounding_noise(self):
        assert AngleVector(PI + 1e-14, 0, 0, 0, 0, -1e-14).as_tuple() == (PI, 0, 0, 0, 0, 0)

    def test_from_sequence_length(self):
        with pytest.raises(DomainError):
            AngleVector.from_sequence([1, 2, 3])


class TestGramMatrix:
    def test_right_angles_give_identity(self):
        g = gram_matrix(AngleVector(*[PI / 2] * 6))
        np.testing.assert_allclose(g, np.eye(4), atol=1e-15)

    def test_regular_ideal(self):
        g = gram_matrix(REGULAR)
        expected = np.full((4, 4), -0.5) + 1.5 * np.eye(4)
        np.testing.assert_allclose(g, expected, atol=1e-15)
        exact = [[Fraction(1) if i == j else Fraction(-1, 2) for j in range(4)] for i in range(4)]
        assert det_leibniz(exact) == Fraction(-27, 16)
        assert np.linalg.det(g) == pytest.approx(-27 / 16, abs=1e-14)

    def test_zero_angles(self):
        g = gram_matrix(AngleVector(*[0.0] * 6))
        np.testing.assert_array_equal(g, np.ones((4, 4)) * -1 + 2 * np.eye(4))

    @given(st.tuples(*[angles] * 6))
    def test_symmetric_unit_diagonal(self, a):
        g = gram_matrix(AngleVector(*a))
        assert np.array_equal(g, g.T)
        assert np.array_equal(np.diag(g), np.ones(4))

    def test_opposite_edges_do_not_share_a_row(self):
        # row i lists the edges of face i; opposite edges never lie on one face
        g = gram_matrix(AngleVector(0.1, 0.2, 0.3, 0.4, 0.5, 0.6))
        names = {round(-math.cos(x), 12): n for n, x in zip("ABCDEF", (0.1, 0.2, 0.3, 0.4, 0.5, 0.6))}
        for i in range(4):
            row = {names[round(g[i, j], 12)] for j in range(4) if j != i}
            assert not ({"A", "D"} <= row or {"B", "E"} <= row or {"C", "F"} <= row)


class TestClassify:
    def test_regular_all_ideal(self):
        assert all(v.kind is VertexKind.IDEAL for v in classify_vertices(REGULAR))

    def test_quarter_octahedron_all_ideal(self):
        assert all(v.kind is VertexKind.IDEAL for v in classify_vertices(QUARTER_OCT))

    def test_half_octahedron_wedge(self):
        kinds = [v.kind for v in classify_vertices(HALF_OCT_WEDGE)]
        assert kinds == [VertexKind.IDEAL, VertexKind.IDEAL, VertexKind.ULTRA_IDEAL, VertexKind.ULTRA_IDEAL]

    def test_finite_vertex(self):
        kinds = [v.kind for v in classify_vertices(AngleVector(*[1.2] * 6))]
        assert kinds == [VertexKind.FINITE] * 4

    def test_tolerance_must_be_positive(self):
        with pytest.raises(DomainError):
            classify_vertices(REGULAR, tol=0)

    @given(st.tuples(*[angles] * 6))
    def test_label_symmetry(self, a):
        A, B, C, D, E, F = a
        swapped = AngleVector(A, C, B, D, F, E)
        k1 = [v.kind for v in classify_vertices(AngleVector(*a))]
        k2 = [v.kind for v in classify_vertices(swapped)]
        assert (k1[0], k1[1]) == (k2[1], k2[0])
        assert sorted(k1[2:], key=str) == sorted(k2[2:], key=str)


class TestVolume:
    def test_regular_ideal_tetrahedron(self):
        assert volume(REGULAR) == pytest.approx(V_TET, abs=1e-10)

    def test_half_octahedron_wedge(self):
        assert volume(HALF_OCT_WEDGE) == pytest.approx(V_OCT / 2, abs=1e-10)

    def test_quarter_octahedron(self):
        assert volume(QUARTER_OCT) == pytest.approx(V_OCT / 4, abs=1e-10)

    def test_agrees_with_ideal_oracle_on_simplex_grid(self):
        count = 0
        for i in range(1, 11):
            for j in range(1, 11 - i):
                t1, t2 = i * PI / 11, j * PI / 11
                t3 = PI - t1 - t2
                v = volume(AngleVector(t1, t2, t3, t1, t2, t3))
                assert v == pytest.approx(ideal_volume_oracle(t1, t2, t3), abs=1e-8)
                count += 1
        assert count >= 45

    def test_degenerate_denominator(self):
        with pytest.raises(NumericalError):
            volume(AngleVector(*[PI] * 6))

    def test_decreasing_in_each_angle(self):
        rng = np.random.default_rng(3)
        h = 1e-6
        for _ in range(20):
            n = int(rng.integers(3, 13))
            wedge = tiling_wedge_angles(n, float(rng.uniform(0.2, 2.9)))
            for name in "ABCDEF":
                x = getattr(wedge, name)
                up = volume(wedge.replace(**{name: x + h}))
                down = volume(wedge.replace(**{name: x - h}))
                assert (up - down) / (2 * h) <= 0


class TestIdealOracle:
    def test_regular(self):
        assert ideal_volume_oracle(PI / 3, PI / 3, PI / 3) == pytest.approx(V_TET, abs=1e-12)

    def test_quarter_octahedron(self):
        assert ideal_volume_oracle(PI / 2, PI / 4, PI / 4) == pytest.approx(V_OCT / 4, abs=1e-12)

    def test_flattened(self):
        assert ideal_volume_oracle(2 * PI / 3, PI / 6, PI / 6) == pytest.approx(IDEAL_2PI3_PI6_PI6, abs=1e-12)

    def test_angle_sum_checked(self):
        with pytest.raises(DomainError):
            ideal_volume_oracle(1, 1, 1)
        with pytest.raises(DomainError):
            ideal_volume_oracle(0, PI / 2, PI / 2)


class TestCriticality:
    @pytest.mark.parametrize("a", [0, PI / 6, PI / 4, PI / 2, 2 * PI / 3])
    def test_maximal_wedge_is_critical(self, a):
        assert criticality_residual(a) <= 1e-4

    def test_off_critical_point(self):
        point = AngleVector(2 * PI / 3, PI / 4, PI / 4, PI / 2, PI / 4, PI / 4)
        assert criticality_residual(2 * PI / 3, point=point) > 1e-2

    def test_range(self):
        with pytest.raises(DomainError):
            criticality_residual(PI)
