from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from cpdyn import CpdynError, PolygonData, Vec2, make_rng, sv_coords

settings.register_profile('cpdyn', max_examples=40, deadline=None,
                           suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
settings.load_profile('cpdyn')

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)
nonzero_fractions = small_fractions.filter(lambda x: x != 0)
vectors = st.builds(Vec2, small_fractions, small_fractions)


@st.composite
def closed_polygons(draw, min_n: int = 3, max_n: int = 6) -> PolygonData:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    polygon = PolygonData(draw(st.lists(vectors, min_size=n, max_size=n)), True)
    try:
        sv_coords(polygon)
    except CpdynError:
        assume(False)
    return polygon


def points(*pairs) -> list[Vec2]:
    return [Vec2(Fraction(x), Fraction(y)) for x, y in pairs]


@pytest.fixture
def triangle() -> PolygonData:
    return PolygonData(points((1, 0), (0, 1), (-1, -1)), True)


@pytest.fixture
def quadrilateral() -> PolygonData:
    return PolygonData(points((1, 0), (1, 1), (-1, 1), (-1, -2)), True)


@pytest.fixture
def pentagon() -> PolygonData:
    return PolygonData(points((1, 0), (0, 1), (-1, 2), (1, -3), (Fraction(2, 3), -1)), True)


@pytest.fixture
def rng():
    return make_rng(7)
