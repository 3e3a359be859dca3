from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cpdyn import (DegenerateDiagonalError, Mat2, NoRealPartnerError, NotTangentError, PolygonData, TangentVector,
                   Vec2, act, braid_check, center, elementary_recut, integrals_F, make_rng, omega,
                   random_closed_polygon, random_tangent, random_twisted_polygon, recut, recut_commutes_with_c,
                   recut_order, recut_tangent, sv_coords)

from conftest import closed_polygons, points


def _recut_or_skip(p: PolygonData, **kwargs) -> PolygonData:
    try:
        return recut(p, **kwargs)
    except DegenerateDiagonalError:
        assume(False)


class TestElementaryRecut:
    def test_known_value(self):
        p = PolygonData(points((1, 0), (0, 1), (-2, -1)), True)
        q = elementary_recut(p, 1)
        assert q.vertex(1) == Vec2(Fraction(3), Fraction(2))
        assert q.vertex(0) == p.vertex(0) and q.vertex(2) == p.vertex(2)
        assert list(sv_coords(q).s) == [2, 1, 1]

    @given(p=closed_polygons(), j=st.integers(0, 5))
    def test_involution_swapping_sides(self, p: PolygonData, j: int):
        j %= p.n
        q = elementary_recut(p, j)
        before, after = sv_coords(p).s, sv_coords(q).s
        assert after[j - 1] == before[j] and after[j] == before[j - 1]
        assert elementary_recut(q, j) == p

    def test_degenerate_diagonal(self):
        square = PolygonData(points((1, 0), (0, 1), (-1, 0), (0, -1)), True)
        with pytest.raises(DegenerateDiagonalError) as err:
            elementary_recut(square, 1)
        assert err.value.index == 1

    def test_equal_sides_are_fixed(self, pentagon: PolygonData, triangle: PolygonData):
        for p in (pentagon, triangle):
            for j in range(p.n):
                assert elementary_recut(p, j) == p
            assert recut(p) == p

    def test_twisted_keeps_monodromy(self):
        rng = make_rng(11)
        p = random_twisted_polygon(5, rng)
        try:
            q = recut(p)
        except DegenerateDiagonalError:
            pytest.skip('degenerate sample')
        assert q.monodromy == p.monodromy
        assert not q.closed


class TestFullRecut:
    def test_order(self):
        assert recut_order(5) == [1, 2, 3, 4, 0]
        assert recut_order(4, 3) == [3, 0, 1, 2]

    def test_explicit_order(self, quadrilateral: PolygonData):
        assert recut(quadrilateral, order=[1, 2, 3, 0]) == recut(quadrilateral)
        assert recut(quadrilateral, order=[]) == quadrilateral

    @given(p=closed_polygons())
    def test_integrals_and_center_preserved(self, p: PolygonData):
        q = _recut_or_skip(p)
        assert integrals_F(sv_coords(q)).F == integrals_F(sv_coords(p)).F
        assert center(q) == center(p)

    @given(p=closed_polygons(3, 3))
    def test_triangle_double_recut(self, p: PolygonData):
        s = sv_coords(p).s
        q = _recut_or_skip(p)
        assert list(sv_coords(q).s) == [s[0], s[2], s[1]]
        assert sv_coords(_recut_or_skip(q)) == sv_coords(p)

    @given(p=closed_polygons(4, 4))
    def test_quadrilateral_period_three(self, p: PolygonData):
        q = _recut_or_skip(p)
        q = _recut_or_skip(q)
        q = _recut_or_skip(q)
        assert sv_coords(q) == sv_coords(p)

    @given(p=closed_polygons(4, 6))
    def test_braid_relations(self, p: PolygonData):
        n = p.n
        checks = braid_check(p)
        assert len(checks) == 2 * n + n * (n - 3) // 2
        for check in checks:
            assert check.passed or check.witness.startswith('degenerate diagonal')

    def test_braid_report(self, quadrilateral: PolygonData):
        checks = braid_check(quadrilateral)
        assert [check.name for check in checks[:2]] == ['R_0^2', 'R_1^2']
        assert checks[0].to_json()['passed'] == checks[0].passed
        assert 'R_0^2' in str(checks[0])


class TestTangentPushforward:
    def test_stays_tangent_and_keeps_omega(self, rng):
        p = random_closed_polygon(5, rng)
        U, V = random_tangent(p, rng), random_tangent(p, rng)
        try:
            q, RU = recut_tangent(p, U)
            _, RV = recut_tangent(p, V)
        except DegenerateDiagonalError:
            pytest.skip('degenerate sample')
        assert q == recut(p)
        assert all(d == 0 for d in TangentVector(RU).side_defects(q))
        assert omega(q, TangentVector(RU), TangentVector(RV)) == omega(p, TangentVector(U), TangentVector(V))

    def test_rejects_twisted_and_wrong_length(self, pentagon: PolygonData, rng):
        with pytest.raises(NotTangentError):
            recut_tangent(random_twisted_polygon(5, rng), [Vec2(0, 0)] * 5)
        with pytest.raises(NotTangentError):
            recut_tangent(pentagon, [Vec2(0, 0)] * 4)


class TestCommutesWithC:
    @pytest.mark.parametrize('c', [Fraction(1), Fraction(1, 2)])
    def test_triangle(self, triangle: PolygonData, c: Fraction):
        checks = recut_commutes_with_c(triangle, c)
        assert len(checks) % 4 == 0 and checks
        for check in checks:
            assert check.passed or check.witness

    def test_no_partner(self, triangle: PolygonData):
        with pytest.raises(NoRealPartnerError):
            recut_commutes_with_c(triangle, Fraction(2))

    def test_tolerance_follows_coordinate_scale(self, triangle: PolygonData):
        flat = PolygonData([Vec2(float(x.x), float(x.y)) for x in triangle.vertices], True)
        stretched = act(Mat2(1e4, 0.0, 0.0, 1e-4), flat)
        checks = recut_commutes_with_c(stretched, 0.5)
        assert len(checks) == 8
        assert all(check.passed for check in checks), [str(check) for check in checks if not check.passed]
