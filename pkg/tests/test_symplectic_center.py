from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cpdyn import (Mat2, NotTangentError, PolygonData, QuadraticForm, SingularSystemError, TangentVector, Vec2,
                   WrongArityError, act, casimir, casimir_bracket_sum, center, center_action, center_conic_constant,
                   circumconic, cut, ijk, ijk_differential, make_rng, omega, random_sl2, random_tangent, sl2_field)

from conftest import closed_polygons, points


def _tangents(p: PolygonData, seed: int) -> tuple[TangentVector, TangentVector]:
    rng = make_rng(seed)
    return TangentVector(random_tangent(p, rng)), TangentVector(random_tangent(p, rng))


class TestForm:
    @given(p=closed_polygons(), seed=st.integers(0, 1000))
    def test_antisymmetric(self, p: PolygonData, seed: int):
        U, V = _tangents(p, seed)
        assert omega(p, U, V) == -omega(p, V, U)
        assert omega(p, U, U) == 0

    def test_not_tangent(self, pentagon: PolygonData):
        U = TangentVector([Vec2(Fraction(1), Fraction(0))] + [Vec2(Fraction(0), Fraction(0))] * 4)
        assert not U.is_tangent(pentagon)
        with pytest.raises(NotTangentError):
            omega(pentagon, U, sl2_field(pentagon, 'e'))

    def test_sl2_fields_are_tangent(self, quadrilateral: PolygonData):
        for kind in ('e', 'h', 'f'):
            assert sl2_field(quadrilateral, kind).is_tangent(quadrilateral)

    def test_unknown_generator(self, triangle: PolygonData):
        with pytest.raises(ValueError):
            sl2_field(triangle, 'g')


class TestHamiltonians:
    def test_triangle(self, triangle: PolygonData):
        assert ijk(triangle) == (-1, -1, -1)
        assert casimir(triangle) == 3
        assert center(triangle) == QuadraticForm(-1, -1, -1)

    @given(p=closed_polygons(), seed=st.integers(0, 1000))
    def test_sl2_generators_are_hamiltonian(self, p: PolygonData, seed: int):
        _, V = _tangents(p, seed)
        dI, dJ, dK = ijk_differential(p, V)
        assert omega(p, sl2_field(p, 'e'), V) == -dI
        assert omega(p, sl2_field(p, 'h'), V) == dJ
        assert omega(p, sl2_field(p, 'f'), V) == dK

    @given(p=closed_polygons())
    def test_sl2_action_on_hamiltonians(self, p: PolygonData):
        I, J, K = ijk(p)
        assert ijk_differential(p, sl2_field(p, 'e')) == (0, 2 * I, J)
        assert ijk_differential(p, sl2_field(p, 'h')) == (2 * I, 0, -2 * K)
        assert ijk_differential(p, sl2_field(p, 'f')) == (J, 2 * K, 0)

    @given(p=closed_polygons())
    def test_casimir_bracket_sum(self, p: PolygonData):
        assert casimir(p) == casimir_bracket_sum(p)


class TestCenter:
    @given(p=closed_polygons(), seed=st.integers(0, 1000))
    def test_equivariance(self, p: PolygonData, seed: int):
        m = random_sl2(make_rng(seed))
        moved = act(m, p)
        assert center(moved) == center(p).pullback(center_action(m))
        assert casimir(moved) == casimir(p)

    @given(p=closed_polygons(4, 6), data=st.data())
    def test_cut_additivity(self, p: PolygonData, data):
        k = data.draw(st.integers(2, p.n - 2))
        first, second = cut(p, k)
        assert first.n + second.n == p.n + 2
        assert center(first) + center(second) == center(p)

    def test_cut_range(self, quadrilateral: PolygonData):
        with pytest.raises(WrongArityError):
            cut(quadrilateral, 1)
        with pytest.raises(WrongArityError):
            cut(quadrilateral, 3)

    def test_circumconic(self, triangle: PolygonData):
        conic = circumconic(triangle.vertices)
        assert conic == QuadraticForm(1, 1, 1)
        assert all(conic.evaluate(x) == 1 for x in triangle.vertices)
        assert center_conic_constant(triangle.vertices) == -1

    def test_float_circumconic_matches_exact(self, pentagon: PolygonData):
        exact = circumconic(pentagon.vertices[:3])
        conic = circumconic([Vec2(float(q.x), float(q.y)) for q in pentagon.vertices[:3]])
        assert all(isinstance(x, float) for x in conic.coefficients())
        assert list(conic.coefficients()) == pytest.approx([float(x) for x in exact.coefficients()])

    @given(p=closed_polygons(3, 3))
    def test_triangle_center_is_swapped_circumconic(self, p: PolygonData):
        try:
            conic = circumconic(p.vertices)
        except SingularSystemError:
            return
        assert center(p) == conic.swap() * center_conic_constant(p.vertices)

    def test_circumconic_arity_and_singular(self):
        with pytest.raises(WrongArityError):
            circumconic(points((1, 0), (0, 1)))
        with pytest.raises(SingularSystemError):
            circumconic(points((1, 0), (-1, 0), (0, 1)))


class TestQuadraticForm:
    def test_pullback_keeps_discriminant(self):
        form = QuadraticForm(Fraction(2), Fraction(3), Fraction(-1))
        m = Mat2(Fraction(2), Fraction(1), Fraction(3), Fraction(2))
        assert form.pullback(m).discriminant() == form.discriminant() == 17
        assert form.pullback(Mat2.identity()) == form

    def test_pullback_evaluates_at_image(self):
        form = QuadraticForm(Fraction(1), Fraction(-2), Fraction(5))
        m = Mat2(Fraction(1), Fraction(2), Fraction(0), Fraction(1))
        x = Vec2(Fraction(3), Fraction(-1))
        assert form.pullback(m).evaluate(x) == form.evaluate(m @ x)

    def test_json_and_arithmetic(self):
        form = QuadraticForm(Fraction(1, 2), Fraction(0), Fraction(-3))
        assert QuadraticForm.from_json(form.to_json()) == form
        assert form + form == form * 2 == 2 * form
        assert form.is_proportional(form * Fraction(-5))
        assert not form.is_proportional(QuadraticForm(Fraction(1), Fraction(1), Fraction(0)))
        assert form.swap().coefficients() == (-3, 0, Fraction(1, 2))
