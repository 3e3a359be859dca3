from fractions import Fraction

import pytest

from cpdyn import (ExhaustedRejectionError, TangentVector, WrongArityError, critical_polygon, info, is_closed,
                   make_rng, random_closed_polygon, random_sl2, random_sv, random_tangent, random_twisted_polygon,
                   regular_polygon, sv_coords)


class TestSampling:
    def test_seed_determines_instance(self):
        first = random_closed_polygon(5, make_rng(3, 1))
        second = random_closed_polygon(5, make_rng(3, 1))
        assert first == second

    def test_streams_differ(self):
        assert random_sv(5, make_rng(3, 1)) != random_sv(5, make_rng(3, 2))

    @pytest.mark.parametrize('n', [3, 4, 5, 6, 7])
    def test_random_closed(self, n: int, rng):
        p = random_closed_polygon(n, rng)
        assert p.closed
        assert isinstance(p.vertices[0].x, Fraction)
        assert is_closed(sv_coords(p))

    def test_positive_sides(self, rng):
        for backend in ('rational', 'float'):
            p = random_closed_polygon(6, rng, backend, positive=True)
            assert all(x > 0 for x in sv_coords(p).s)

    def test_random_twisted(self, rng):
        p = random_twisted_polygon(4, rng)
        assert p.monodromy.det() == 1

    def test_regular_pentagon(self):
        sv = sv_coords(regular_polygon(5))
        assert list(sv.s) == pytest.approx([1.0] * 5)
        assert list(sv.v) == pytest.approx([0.6180339887] * 5)

    def test_random_sl2(self, rng):
        for backend in ('rational', 'float'):
            assert random_sl2(rng, backend).det() == pytest.approx(1)

    def test_random_tangent_keeps_sides(self, pentagon, rng):
        U = TangentVector(random_tangent(pentagon, rng))
        assert all(d == 0 for d in U.side_defects(pentagon))

    def test_arity(self, rng):
        with pytest.raises(WrongArityError):
            random_closed_polygon(2, rng)
        with pytest.raises(WrongArityError):
            regular_polygon(2)
        for n in (3, 5, 2):
            with pytest.raises(WrongArityError):
                critical_polygon(n, rng)

    def test_exhausted(self, rng):
        with pytest.raises(ExhaustedRejectionError) as err:
            random_closed_polygon(3, rng, limit=0)
        assert err.value.code == 'cli_harness.ExhaustedRejection'


class TestConfig:
    def test_info_loaded(self):
        assert info.tolerances.float_equal == 1e-9
        assert info.defaults.seed == 42
        assert info.defaults.backend == 'float'
        assert list(info.suites) == ['core', 'lax', 'integrals', 'recutting', 'symplectic', 'smallgons']
        assert info.csv['zones'] == ['c', 'K', 'exists']
