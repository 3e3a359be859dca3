"""
Random and canonical polygon instances for the command line, the verification suites and the tests.

All randomness flows through numpy Generators created with make_rng, so a seed fully determines every instance.
Rational instances use small numerators and denominators to keep exact arithmetic fast.
"""

import logging
import numpy as np

from fractions import Fraction
from typing import Optional

from .config import info
from .errors import CpdynError, ExhaustedRejectionError, WrongArityError
from .core_polygon import Mat2, PolygonData, SVCoords, Vec2, bracket, is_zero, reconstruct, standard_frame, sv_coords

logger = logging.getLogger(__name__)


# ======================== USEFUL FUNCTIONS ============================================================================
def make_rng(seed: Optional[int] = None, *stream: int) -> np.random.Generator:
    """
    Generator for a seed and an optional stream of integers identifying the consumer.
    """
    seed = info.defaults.seed if seed is None else seed
    return np.random.default_rng([seed, *stream])


def random_scalar(rng: np.random.Generator, backend: str = 'rational', bound: Optional[int] = None,
                  nonzero: bool = True):
    """
    A random scalar in [-bound, bound].

    Rationals have numerators up to bound * 4 and denominators 1 to 4.
    """
    bound = info.defaults.coordinate_range if bound is None else bound
    while True:
        if backend == 'rational':
            value = Fraction(int(rng.integers(-4 * bound, 4 * bound + 1)), int(rng.integers(1, 5)))
        else:
            value = float(rng.uniform(-bound, bound))
        if not (nonzero and is_zero(value)):
            return value


def random_vec(rng: np.random.Generator, backend: str = 'rational') -> Vec2:
    return Vec2(random_scalar(rng, backend, nonzero=False), random_scalar(rng, backend, nonzero=False))


def _check_arity(n: int) -> None:
    if n < 3:
        raise WrongArityError(f'Polygons need n >= 3, got {n}.')


def _star_vertices(n: int, rng: np.random.Generator, backend: str) -> list[Vec2]:
    angles = np.sort(rng.uniform(0, 2 * np.pi, n))
    gaps = np.diff(np.append(angles, angles[0] + 2 * np.pi))
    if np.any(gaps >= np.pi):
        return []
    radii = rng.uniform(0.5, 2.0, n)
    points = []
    for r, t in zip(radii, angles):
        x, y = r * np.cos(t), r * np.sin(t)
        if backend == 'rational':
            points.append(Vec2(Fraction(round(16 * x), 16), Fraction(round(16 * y), 16)))
        else:
            points.append(Vec2(float(x), float(y)))
    return points


def random_closed_polygon(n: int, rng: np.random.Generator, backend: str = 'rational', positive: bool = False,
                          limit: Optional[int] = None) -> PolygonData:
    """
    Rejection-samples a closed polygon satisfying the polygon invariants.

    Args:
        n: Number of vertices.
        rng: The generator.
        backend: 'rational' or 'float'.
        positive: Draw star-shaped polygons around the origin, so that every s[i] > 0.
        limit: Maximal number of attempts, rejection_limit from info.json by default.

    Returns:
        The polygon.

    Raises:
        ExhaustedRejectionError: No valid polygon was found within the limit.

    """
    _check_arity(n)
    limit = info.defaults.rejection_limit if limit is None else limit
    for attempt in range(limit):
        points = _star_vertices(n, rng, backend) if positive else [random_vec(rng, backend) for _ in range(n)]
        if not points:
            continue
        polygon = PolygonData(points, True)
        try:
            sv = sv_coords(polygon)
        except CpdynError:
            continue
        if positive and any(x <= 0 for x in sv.s):
            continue
        if attempt:
            logger.debug('closed %d-gon accepted after %d rejections', n, attempt)
        return polygon
    raise ExhaustedRejectionError(f'No valid closed {n}-gon after {limit} attempts.')


def random_sv(n: int, rng: np.random.Generator, backend: str = 'rational') -> SVCoords:
    _check_arity(n)
    return SVCoords([random_scalar(rng, backend, 3) for _ in range(n)], [random_scalar(rng, backend, 3)
                                                                         for _ in range(n)])


def random_twisted_polygon(n: int, rng: np.random.Generator, backend: str = 'rational',
                           limit: Optional[int] = None) -> PolygonData:
    """
    A polygon reconstructed from random nonzero coordinates in the standard frame.

    Raises:
        ExhaustedRejectionError: Every draw within the limit was degenerate.

    """
    _check_arity(n)
    limit = info.defaults.rejection_limit if limit is None else limit
    for _ in range(limit):
        sv = random_sv(n, rng, backend)
        try:
            return reconstruct(sv, standard_frame(sv)).validate()
        except CpdynError:
            continue
    raise ExhaustedRejectionError(f'No valid twisted {n}-gon after {limit} attempts.')


def regular_polygon(n: int) -> PolygonData:
    """
    The regular n-gon centred at the origin, scaled so that every side bracket equals 1.

    Examples:
        regular_polygon(5) has s = (1, ..., 1) and v = (2cos72, ...) = (0.618034, ...)

    """
    _check_arity(n)
    step = 2 * np.pi / n
    radius = 1 / np.sqrt(np.sin(step))
    return PolygonData([Vec2(float(radius * np.cos(k * step)), float(radius * np.sin(k * step))) for k in range(n)],
                       True, Mat2.identity(1.0))


def critical_polygon(n: int, rng: np.random.Generator, backend: str = 'rational') -> PolygonData:
    """
    A closed even polygon whose even vertices lie on one line through the origin and odd vertices on another.

    Its side brackets are a critical value of the side-bracket map and the map drops rank there. The short diagonals
    vanish, so the polygon has no (s, v) coordinates.

    Raises:
        WrongArityError: n is odd or smaller than 4.

    """
    if n < 4 or n % 2:
        raise WrongArityError(f'Critical polygons need an even n >= 4, got {n}.')
    while True:
        a, b = random_vec(rng, backend), random_vec(rng, backend)
        if not is_zero(bracket(a, b)):
            break
    return PolygonData([(a if k % 2 == 0 else b) * random_scalar(rng, backend, 3) for k in range(n)], True)


def random_sl2(rng: np.random.Generator, backend: str = 'rational') -> Mat2:
    """
    A random matrix of determinant 1.
    """
    a = random_scalar(rng, backend, 3)
    b = random_scalar(rng, backend, 3, nonzero=False)
    c = random_scalar(rng, backend, 3, nonzero=False)
    return Mat2(a, b, c, (1 + b * c) / a)


def random_tangent(p: PolygonData, rng: np.random.Generator, backend: Optional[str] = None) -> list[Vec2]:
    """
    A random displacement U of the vertices of a closed polygon keeping all side brackets fixed to first order,
    [U_i, P_{i+1}] + [P_i, U_{i+1}] = 0.

    U_0 and all but one of the free coefficients are random; the last coefficient closes the cycle of conditions.

    Args:
        p: A closed polygon.
        rng: The generator.
        backend: Scalar backend of the draw, inferred from the vertices by default.

    Returns:
        The per-vertex displacements.

    """
    if backend is None:
        backend = 'rational' if isinstance(p.vertices[0].x, Fraction) else 'float'
    n = p.n
    sv = sv_coords(p)
    points = p.vertices
    tangent = [random_vec(rng, backend)]
    for i in range(n - 1):
        a = -bracket(tangent[i], points[(i + 1) % n]) / sv.s[i]
        if i < n - 2:
            b = random_scalar(rng, backend, nonzero=False)
        else:
            b = -(a * sv.s[n - 1] + bracket(points[n - 1], tangent[0])) / bracket(points[n - 2], points[0])
        tangent.append(points[i + 1] * a + points[i] * b)
    return tangent
