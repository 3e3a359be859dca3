from fractions import Fraction

import pytest
from hypothesis import given

from cpdyn import (AllRelated, BranchLostError, ButterflyClass, CollinearPairError, Mat2, MoebiusMap,
                   NotClosedChainError, NotRelatedError, PolygonData, Vec2, WrongArityError, ZeroCError, bracket,
                   c_step, classify_butterfly, composite_reflection, even_closure_condition, fixed_point_roots,
                   integrals_F, is_c_related, iterate_c_dynamics, lax_discriminant, lax_matrix, partner_near,
                   random_twisted_polygon, real_partners, reflect, reflection_chain, reflection_matrix,
                   solve_c_related, step_matrix, sv_coords, vertices_close, bianchi_complete)

from conftest import closed_polygons, points


class TestReflections:
    def test_reflect_known_value(self):
        q, p, x = points((1, 2), (2, 1), (1, 0))
        assert reflect(q, p, x) == Vec2(0, 1)

    @given(p=closed_polygons(3, 3))
    def test_reflection_swaps_and_is_involution(self, p: PolygonData):
        a, b, x = p.vertices
        assert reflect(a, b, a) == b
        assert reflect(a, b, b) == a
        assert reflect(a, b, reflect(a, b, x)) == x
        assert reflection_matrix(a, b) @ x == reflect(a, b, x)

    def test_collinear(self):
        q, p, x = points((1, 2), (2, 4), (1, 0))
        with pytest.raises(CollinearPairError):
            reflect(q, p, x)

    def test_c_step_known_value(self):
        q, p, p_next = points((1, 2), (1, 0), (2, 1))
        q_next = c_step(q, p, p_next, Fraction(2))
        assert q_next == Vec2(0, 1)
        assert bracket(p_next, q_next) == 2
        assert bracket(q, q_next) == bracket(p, p_next)


class TestLaxMatrix:
    def test_step_determinant(self, quadrilateral: PolygonData):
        sv = sv_coords(quadrilateral)
        c = Fraction(1, 3)
        for i in range(4):
            assert step_matrix(sv, i, c).det() == c * c / sv.side(i) ** 2 - 1

    def test_lax_determinant(self, quadrilateral: PolygonData):
        sv = sv_coords(quadrilateral)
        c = Fraction(3, 2)
        expected = Fraction(1)
        for x in sv.s:
            expected *= c * c / (x * x) - 1
        assert lax_matrix(sv, c).det() == expected

    def test_moebius_scalar(self):
        assert MoebiusMap(Mat2(Fraction(2), Fraction(0), Fraction(0), Fraction(2))).is_scalar()
        assert not MoebiusMap(Mat2(Fraction(2), Fraction(1), Fraction(0), Fraction(2))).is_scalar()
        assert MoebiusMap(Mat2(2.0, 1e-14, 0.0, 2.0)).is_scalar()

    def test_fixed_point_roots(self):
        assert fixed_point_roots(Mat2(Fraction(3), Fraction(-2), Fraction(1), Fraction(0))) == [1, 2]
        assert fixed_point_roots(Mat2(Fraction(1), Fraction(4), Fraction(0), Fraction(3))) == [2]
        assert fixed_point_roots(Mat2(Fraction(0), Fraction(-1), Fraction(1), Fraction(0))) == []


class TestSolve:
    def test_triangle_unit_c_has_one_exact_partner(self, triangle: PolygonData):
        solutions = solve_c_related(triangle, Fraction(1))
        assert len(solutions) == 1
        pair = solutions[0]
        assert pair.t_root == 1
        assert pair.q.vertices == tuple(points((1, 1), (-1, 0), (0, -1)))
        assert is_c_related(triangle, pair.q, Fraction(1))
        assert pair.residual() == 0

    def test_triangle_half_c_has_two_partners(self, triangle: PolygonData):
        solutions = solve_c_related(triangle, Fraction(1, 2))
        assert len(solutions) == 2
        assert solutions[0].t_root < solutions[1].t_root
        for pair in solutions:
            assert is_c_related(triangle, pair.q, Fraction(1, 2))
        assert lax_discriminant(sv_coords(triangle), Fraction(1, 2)) > 0

    def test_triangle_large_c_has_none(self, triangle: PolygonData):
        assert solve_c_related(triangle, Fraction(2)) == []
        assert real_partners(triangle, Fraction(2)) == []
        assert lax_discriminant(sv_coords(triangle), Fraction(2)) < 0

    def test_zero_c(self, triangle: PolygonData):
        with pytest.raises(ZeroCError):
            solve_c_related(triangle, 0)

    def test_relation_is_symmetric_up_to_sign(self, triangle: PolygonData):
        q = solve_c_related(triangle, Fraction(1))[0].q
        assert is_c_related(q, triangle.negated(), Fraction(1))

    def test_twisted_partners_share_monodromy(self, rng):
        p = random_twisted_polygon(4, rng, 'float')
        for q in real_partners(p, 0.25):
            assert q.monodromy == p.monodromy
            assert is_c_related(p, q, 0.25, 1e-7)

    def test_partner_near(self, triangle: PolygonData):
        solutions = solve_c_related(triangle, Fraction(1, 2))
        for pair in solutions:
            assert vertices_close(partner_near(triangle, Fraction(1, 2), pair.q), pair.q)

    def test_all_related_family(self, triangle: PolygonData):
        family = AllRelated(triangle, Fraction(1))
        assert family
        assert family.partner(Fraction(1)).q == solve_c_related(triangle, Fraction(1))[0].q


class TestDynamics:
    def test_orbit_preserves_integrals(self, pentagon: PolygonData):
        orbit = iterate_c_dynamics(pentagon, 0.5, 5)
        assert len(orbit) == 6
        start = integrals_F(sv_coords(orbit[0]))
        for previous, current in zip(orbit, orbit[1:]):
            assert is_c_related(previous, current, 0.5, 1e-7)
            assert list(integrals_F(sv_coords(current)).F) == pytest.approx(list(start.F), rel=1e-7, abs=1e-9)

    def test_orbit_never_returns_to_minus_previous(self, pentagon: PolygonData):
        orbit = iterate_c_dynamics(pentagon, 0.5, 4)
        for before, after in zip(orbit, orbit[2:]):
            assert not vertices_close(after, before.negated(), 1e-7)

    def test_singular_c_orbit_shifts_labels(self, triangle: PolygonData):
        orbit = iterate_c_dynamics(triangle, Fraction(1), 2)
        assert orbit[2].vertices == tuple(points((0, 1), (-1, -1), (1, 0)))

    def test_branch_lost_on_identity_lax(self, triangle: PolygonData, monkeypatch):
        import cpdyn.lax_crelation as lx

        monkeypatch.setattr(lx, 'solve_c_related', lambda p, c: AllRelated(p, c))
        with pytest.raises(BranchLostError) as err:
            lx.iterate_c_dynamics(triangle, Fraction(1), 1)
        assert err.value.index == 0


class TestButterflies:
    def test_known_cases(self):
        assert classify_butterfly(points((1, 0), (2, 1), (0, 1), (1, 2))) is ButterflyClass.BUTTERFLY
        assert classify_butterfly(points((1, 0), (2, 1), (0, -1), (1, 2))) is ButterflyClass.ANTI_BUTTERFLY
        assert classify_butterfly(points((1, 0), (2, 1), (-1, 0), (3, 5))) is ButterflyClass.OPPOSITE_SYMMETRIC
        assert classify_butterfly(points((1, 0), (2, 1), (5, 3), (1, 7))) is ButterflyClass.GENERIC

    def test_consecutive_vertices_of_related_pair(self, triangle: PolygonData):
        q = solve_c_related(triangle, Fraction(1))[0].q
        for i in range(3):
            quad = (triangle.vertex(i), triangle.vertex(i + 1), q.vertex(i + 1), q.vertex(i))
            assert classify_butterfly(quad) is ButterflyClass.BUTTERFLY


class TestReflectionChains:
    def test_odd_chain(self, triangle: PolygonData):
        p, q = reflection_chain(triangle, Vec2(Fraction(1), Fraction(1)))
        assert is_c_related(p, q, bracket(p.vertices[0], q.vertices[0]))

    def test_even_chain(self, quadrilateral: PolygonData):
        assert even_closure_condition(sv_coords(quadrilateral)) == 0
        assert composite_reflection(quadrilateral).is_identity()
        p, q = reflection_chain(quadrilateral, Vec2(Fraction(1), Fraction(2)))
        assert is_c_related(p, q, bracket(p.vertices[0], q.vertices[0]))

    def test_even_condition_needs_even_n(self, triangle: PolygonData):
        with pytest.raises(WrongArityError):
            even_closure_condition(sv_coords(triangle))

    def test_twisted_input(self, rng):
        with pytest.raises(NotClosedChainError):
            reflection_chain(random_twisted_polygon(5, rng), Vec2(Fraction(1), Fraction(0)))


class TestBianchi:
    def test_completion(self, triangle: PolygonData):
        q = solve_c_related(triangle, Fraction(1, 2))[0].q
        r = solve_c_related(triangle, Fraction(1))[0].q
        s = bianchi_complete(triangle, q, r, Fraction(1, 2), Fraction(1))
        assert is_c_related(q, s, Fraction(1), 1e-7)
        assert is_c_related(r, s, Fraction(1, 2), 1e-7)
        for i in range(3):
            quad = (triangle.vertex(i), q.vertex(i), s.vertex(i), r.vertex(i))
            assert classify_butterfly(quad, 1e-7) is ButterflyClass.BUTTERFLY

    def test_unrelated_input(self, triangle: PolygonData):
        q = solve_c_related(triangle, Fraction(1))[0].q
        with pytest.raises(NotRelatedError):
            bianchi_complete(triangle, q, q, Fraction(1, 2), Fraction(1))
