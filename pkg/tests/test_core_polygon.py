from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cpdyn import (DegeneratePolygonError, FrameMismatchError, IndexOrderError, Mat2, PolygonData, SVCoords,
                   SingularSystemError, Vec2, WrongArityError, act, bracket, closure_defect, closure_sign_defect,
                   continuant, critical_polygon, exact_determinant, format_scalar, is_closed, is_regular_value,
                   make_rng, monodromy, monodromy_via_continuants, parse_scalar, ptolemy_defect, reconstruct,
                   side_map_rank, solve_linear, sqrt, standard_frame, sv_coords, sv_equal_up_to_shift,
                   tridiagonal_matrix, vertices_close, recursion_coefficients)

from conftest import closed_polygons, points


class TestScalars:
    def test_format(self):
        assert format_scalar(Fraction(3, 4)) == '3/4'
        assert format_scalar(Fraction(2)) == '2/1'
        assert format_scalar(0.5) == '0.5'
        assert format_scalar(2.0) == '2.0'

    def test_parse(self):
        assert parse_scalar('3/4') == Fraction(3, 4)
        assert parse_scalar('5') == Fraction(5)
        assert parse_scalar('0.25') == 0.25
        assert isinstance(parse_scalar('0.25'), float)
        assert parse_scalar('0.25', 'rational') == Fraction(1, 4)
        assert parse_scalar('1/3', 'float') == pytest.approx(1 / 3)

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_scalar('abc')
        with pytest.raises(ValueError):
            parse_scalar('1', 'complex')

    def test_sqrt_stays_exact_on_squares(self):
        assert sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert isinstance(sqrt(Fraction(2)), float)

    @given(x=st.fractions(max_denominator=50))
    def test_format_parse(self, x: Fraction):
        assert parse_scalar(format_scalar(x)) == x


class TestMat2:
    def test_inverse_and_power(self):
        m = Mat2(Fraction(2), Fraction(1), Fraction(1), Fraction(1))
        assert (m @ m.inverse()).is_identity()
        assert m.power(3) == m @ m @ m
        assert m.power(-2) == (m @ m).inverse()

    def test_singular_inverse(self):
        with pytest.raises(ZeroDivisionError):
            Mat2(Fraction(1), Fraction(2), Fraction(2), Fraction(4)).inverse()

    def test_solve_linear(self):
        assert solve_linear([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
        solution = solve_linear([[2.0, 1.0], [1.0, 3.0]], [3.0, 5.0])
        assert all(isinstance(x, float) for x in solution)
        assert solution == pytest.approx([0.8, 1.4])
        for backend in (int, float):
            with pytest.raises(SingularSystemError):
                solve_linear([[backend(1), backend(2)], [backend(2), backend(4)]], [backend(1), backend(1)])


class TestCoordinates:
    def test_triangle_coordinates(self, triangle: PolygonData):
        sv = sv_coords(triangle)
        assert list(sv.s) == [1, 1, 1]
        assert list(sv.v) == [-1, -1, -1]

    def test_bracket(self):
        a, b, c = points((1, 0), (0, 1), (-1, -1))
        assert bracket(a, b) == 1
        assert bracket(a, c) == -1
        assert bracket(b, a) == -1

    def test_degenerate_side(self):
        with pytest.raises(DegeneratePolygonError) as err:
            sv_coords(PolygonData(points((1, 0), (2, 0), (0, 1)), True))
        assert err.value.index == 0
        assert err.value.code == 'core_polygon.DegeneratePolygon'

    def test_too_few_vertices(self):
        with pytest.raises(WrongArityError):
            PolygonData(points((1, 0), (0, 1)), True)

    @given(p=closed_polygons())
    def test_reconstruct_roundtrip(self, p: PolygonData):
        sv = sv_coords(p)
        rebuilt = reconstruct(sv, (p.vertices[0], p.vertices[1]))
        assert rebuilt.closed
        assert vertices_close(rebuilt, p)

    @given(p=closed_polygons())
    def test_sl2_invariance(self, p: PolygonData):
        m = Mat2(Fraction(2), Fraction(1), Fraction(3), Fraction(2))
        assert sv_coords(act(m, p)) == sv_coords(p)

    def test_frame_mismatch(self, triangle: PolygonData):
        sv = sv_coords(triangle)
        with pytest.raises(FrameMismatchError):
            reconstruct(sv, tuple(points((1, 0), (0, 2))))

    def test_twisted_reconstruction(self):
        sv = SVCoords([Fraction(1)] * 3, [Fraction(1)] * 3)
        p = reconstruct(sv, standard_frame(sv))
        assert not p.closed
        assert p.monodromy == -Mat2.identity()
        assert sv_coords(p) == sv

    def test_shift_equality(self):
        a = SVCoords([1, 2, 3], [4, 5, 6])
        b = SVCoords([2, 3, 1], [5, 6, 4])
        assert sv_equal_up_to_shift(a, b)
        assert not sv_equal_up_to_shift(a, SVCoords([1, 3, 2], [4, 6, 5]))


class TestMonodromy:
    def test_triangle_monodromy(self, triangle: PolygonData):
        assert monodromy(sv_coords(triangle)).is_identity()
        assert monodromy(SVCoords([Fraction(1)] * 3, [Fraction(1)] * 3)) == -Mat2.identity()

    def test_continuant_values(self):
        a, b = [Fraction(-1)] * 3, [Fraction(1)] * 3
        assert continuant(a, b, 0, 2) == 0
        assert continuant(a, b, 0, 3) == 1
        assert continuant(a, b, 1, 0) == 0

    def test_continuant_index_order(self):
        with pytest.raises(IndexOrderError):
            continuant([Fraction(1)] * 3, [Fraction(1)] * 3, 3, 1)

    @given(a=st.lists(st.fractions(-5, 5, max_denominator=4), min_size=1, max_size=6), data=st.data())
    def test_continuant_is_tridiagonal_determinant(self, a, data):
        b = data.draw(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=len(a), max_size=len(a)))
        for j in range(1, len(a) + 1):
            assert continuant(a, b, 0, j) == exact_determinant(tridiagonal_matrix(a, b, 0, j))

    @given(p=closed_polygons())
    def test_monodromy_via_continuants(self, p: PolygonData):
        sv = sv_coords(p)
        assert monodromy(sv) == monodromy_via_continuants(sv)
        assert monodromy(sv).det() == 1

    @given(p=closed_polygons())
    def test_closure_defects_vanish(self, p: PolygonData):
        sv = sv_coords(p)
        assert is_closed(sv)
        assert all(d == 0 for d in closure_defect(sv))
        assert all(d == 0 for d in closure_sign_defect(sv))

    def test_sign_defect_tells_minus_identity(self):
        sv = SVCoords([Fraction(1)] * 3, [Fraction(1)] * 3)
        assert all(d == 0 for d in closure_defect(sv))
        assert all(d == -2 for d in closure_sign_defect(sv))
        assert not is_closed(sv)

    def test_recursion_coefficients(self, triangle: PolygonData):
        a, b = recursion_coefficients(sv_coords(triangle))
        assert a == [-1, -1, -1]
        assert b == [1, 1, 1]


class TestPtolemy:
    @given(p=closed_polygons(4, 5))
    def test_relations_hold(self, p: PolygonData):
        assert all(d == 0 for d in ptolemy_defect(sv_coords(p)))

    def test_wrong_arity(self, triangle: PolygonData):
        with pytest.raises(WrongArityError):
            ptolemy_defect(sv_coords(triangle))


class TestRegularValues:
    def test_known_cases(self):
        assert is_regular_value([1, 1, 1])
        assert not is_regular_value([1, 1, 1, 1])
        assert is_regular_value([2, 1, 1, 1])
        assert not is_regular_value([1, 0, 1])

    def test_side_map_rank(self, quadrilateral: PolygonData):
        assert side_map_rank(quadrilateral) == 4

    def test_rank_drops_at_critical_value(self):
        square = PolygonData(points((1, 0), (0, 1), (-1, 0), (0, -1)), True)
        s = [bracket(square.vertex(i), square.vertex(i + 1)) for i in range(4)]
        assert s == [1, 1, 1, 1] and not is_regular_value(s)
        assert side_map_rank(square) == 3

    @pytest.mark.parametrize('n', [4, 6])
    def test_critical_polygons(self, n: int):
        rng = make_rng(3, n)
        for _ in range(5):
            p = critical_polygon(n, rng)
            assert not is_regular_value([bracket(p.vertex(i), p.vertex(i + 1)) for i in range(n)])
            assert side_map_rank(p) < n
            with pytest.raises(DegeneratePolygonError):
                sv_coords(p)

    def test_full_rank_away_from_collinear_diagonals(self):
        # s = (1, 1, -1, 1) is critical only for twisted polygons
        p = PolygonData(points((1, 0), (0, 1), (-1, 1), (2, -1)), True)
        assert list(sv_coords(p).s) == [1, 1, -1, 1]
        assert side_map_rank(p) == 4
