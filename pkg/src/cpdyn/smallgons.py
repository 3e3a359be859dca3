"""
Closed-form results for triangles, quadrilaterals and pentagons.

Triangles: a c-related triangle exists iff c^2 Q <= 4 (s[0] s[1] s[2])^2, with
Q = (s[0] + s[1] + s[2])(s[0] + s[1] - s[2])(s[1] + s[2] - s[0])(s[2] + s[0] - s[1]). Partners are images M P with
M in SL(2), and the motion is elliptic, parabolic or hyperbolic according to the sign of Q.

Quadrilaterals: in the normal frame P_0 = (1, 0), P_1 = (0, s[0]) the partner parameter solves b^2 + u b + v = 0.
The vertices of a c-related pair lie on two homothetic central conics.

Pentagons: closed pentagons with given sides are charted by x = v[1], y = v[4]. The single remaining integral K is a
rational function on the chart, the vector field is Hamiltonian for dx ^ dy / (xy), and partners exist outside a
band of K values bounded by the roots of a quadratic.

General Documentation:
    The triangle identity (m - l)^2 + 4kn = -c^2 Q / (s[0] s[1] s[2])^2 for the matrix M = [[m, n], [k, l]] is checked
    exactly over fractions. [P, M P] = k x^2 - (m - l) xy - n y^2 turns [P_i, M P_i] = c into a linear system for
    (m - l, k, n).

    The quadrilateral conics are fitted as forms m x^2 + 2n xy + k y^2 taking equal values on opposite vertices. Their
    type follows the sign of mk - n^2.

    For pentagons, D = prod(c^2 - s[j]^2). When D > 0 the forbidden band is (K_-, K_+) with
    K_{+-} = (sum(s^2) - 2c^2) c^2 / prod(s) +- 2 sqrt(D) / (c prod(s)). When D < 0 a partner always exists.
"""

import enum
import logging
import numpy as np

from math import prod
from typing import Optional, Sequence

from .config import info
from .symplectic_center import QuadraticForm
from .lax_crelation import AllRelated, fixed_point_roots, iterate_c_dynamics, lax_matrix, solve_c_related
from .errors import ChartSingularError, CpdynError, DegenerateQuadError, FitSingularError, WrongArityError
from .core_polygon import (SCALAR_TYPE, Mat2, PolygonData, SVCoords, Vec2, act, bracket, format_scalar,
                           is_exact, is_zero, reconstruct, solve_linear, sqrt, standard_frame, sv_coords)

logger = logging.getLogger(__name__)


# ======================== CLASSES =====================================================================================
class Motion(enum.Enum):
    ELLIPTIC = 'Elliptic'
    PARABOLIC = 'Parabolic'
    HYPERBOLIC = 'Hyperbolic'


class ConicKind(enum.Enum):
    ELLIPSE = 'Ellipse'
    HYPERBOLA = 'Hyperbola'
    DEGENERATE = 'Degenerate'


class TriangleReport:
    """
    Class storing the existence test for c-related triangles with given sides.

    Attributes:
        discriminant_lhs: c^2 Q.
        discriminant_rhs: 4 (s[0] s[1] s[2])^2.
        exists: lhs <= rhs.
        motion: Sign class of Q.
        solver_agrees: Whether solve_c_related on a triangle with these sides finds a partner exactly when exists.
    """

    def __init__(self, discriminant_lhs: SCALAR_TYPE, discriminant_rhs: SCALAR_TYPE, exists: bool, motion: Motion,
                 solver_agrees: Optional[bool] = None) -> None:
        self.discriminant_lhs = discriminant_lhs
        self.discriminant_rhs = discriminant_rhs
        self.exists = exists
        self.motion = motion
        self.solver_agrees = solver_agrees

    def __str__(self) -> str:
        return (f'TriangleReport: {self.discriminant_lhs} <= {self.discriminant_rhs} is {self.exists}, '
                f'{self.motion.value} motion')

    def to_json(self) -> dict:
        return {'discriminant_lhs': format_scalar(self.discriminant_lhs),
                'discriminant_rhs': format_scalar(self.discriminant_rhs), 'exists': self.exists,
                'motion': self.motion.value, 'solver_agrees': self.solver_agrees}


class PentagonChart:
    """
    Class representing a closed pentagon with sides s by its chart coordinates x = v[1] and y = v[4].
    """

    def __init__(self, x: SCALAR_TYPE, y: SCALAR_TYPE, s: Sequence[SCALAR_TYPE]) -> None:
        if len(s) != 5:
            raise WrongArityError(f'A pentagon chart needs 5 sides, got {len(s)}.')
        self.x = x
        self.y = y
        self.s = list(s)

    def __str__(self) -> str:
        return f'PentagonChart(x={self.x}, y={self.y}, s={self.s})'

    def __repr__(self) -> str:
        return f'PentagonChart({self.x!r}, {self.y!r}, {self.s!r})'


# ======================== TRIANGLES ===================================================================================
def _triangle_product(s: Sequence[SCALAR_TYPE]) -> SCALAR_TYPE:
    a, b, c = s
    return (a + b + c) * (a + b - c) * (b + c - a) * (c + a - b)


def triangle_from_sides(s: Sequence[SCALAR_TYPE]) -> PolygonData:
    """
    The triangle (1, 0), (0, s[0]), (-s[1] / s[0], -s[2]), which has side brackets s.
    """
    one = s[0] ** 0
    return PolygonData([Vec2(one, 0 * one), Vec2(0 * one, s[0]), Vec2(-s[1] / s[0], -s[2])], True)


def triangle_analysis(s: Sequence[SCALAR_TYPE], c: SCALAR_TYPE, cross_check: bool = True) -> TriangleReport:
    """
    Existence and motion type of c-related triangles with sides s.

    Examples:
        s = (1, 1, 1), c = 1 -> 3 <= 4, exists, Elliptic
        s = (1, 1, 1), c = 2 -> 12 > 4, does not exist

    Args:
        s: The three side brackets, nonzero.
        c: The nonzero constant.
        cross_check: Also run solve_c_related on triangle_from_sides(s).

    Returns:
        The TriangleReport.

    """
    if len(s) != 3:
        raise WrongArityError(f'Triangle analysis needs 3 sides, got {len(s)}.')
    product = _triangle_product(s)
    lhs = c * c * product
    rhs = 4 * prod(s) ** 2
    exists = lhs <= rhs if is_exact(lhs) and is_exact(rhs) else lhs <= rhs + info.tolerances.float_equal * rhs
    scale = max(abs(float(x)) for x in s) ** 4
    if is_zero(product, info.tolerances.parabolic * scale):
        motion = Motion.PARABOLIC
    else:
        motion = Motion.ELLIPTIC if product > 0 else Motion.HYPERBOLIC
    agrees = None
    if cross_check:
        solutions = solve_c_related(triangle_from_sides(s), c)
        agrees = (isinstance(solutions, AllRelated) or bool(solutions)) == exists
    return TriangleReport(lhs, rhs, exists, motion, agrees)


def _triangle_system(p: PolygonData, c: SCALAR_TYPE) -> tuple[SCALAR_TYPE, SCALAR_TYPE, SCALAR_TYPE]:
    rows = [[-q.x * q.y, q.x * q.x, -q.y * q.y] for q in p.vertices]
    x, y, z = solve_linear(rows, [c, c, c])
    return x, y, z


def triangle_identity_check(s: Sequence[SCALAR_TYPE], c: SCALAR_TYPE, triangle: PolygonData) -> SCALAR_TYPE:
    """
    Residual of (m - l)^2 + 4kn = -c^2 Q / (s[0] s[1] s[2])^2, with (m - l, k, n) solved from [P_i, M P_i] = c.

    Args:
        s: The sides of the triangle.
        c: The constant.
        triangle: A triangle realizing s.

    Returns:
        The residual, exactly zero over fractions.

    Raises:
        SingularSystemError: The linear system is singular.

    """
    d, k, n = _triangle_system(triangle, c)
    return d * d + 4 * k * n + c * c * _triangle_product(s) / prod(s) ** 2


def triangle_partner_matrices(p: PolygonData, c: SCALAR_TYPE) -> list[Mat2]:
    """
    The SL(2) matrices M for which M P is c-related to the triangle P, zero to two of them.

    With d = m - l the determinant condition reads m^2 - d m - (1 + kn) = 0.

    Raises:
        SingularSystemError: The linear system is singular.

    """
    if p.n != 3:
        raise WrongArityError(f'Triangle partners need n = 3, got {p.n}.')
    d, k, n = _triangle_system(p, c)
    disc = d * d + 4 + 4 * k * n
    if is_exact(disc) and disc < 0 or not is_exact(disc) and disc < -info.tolerances.float_equal:
        return []
    if is_zero(disc):
        ms = [d / 2]
    else:
        root = sqrt(disc)
        ms = [(d - root) / 2, (d + root) / 2]
    return [Mat2(m, n, k, m - d) for m in ms]


# ======================== QUADRILATERALS ==============================================================================
def quad_normal_frame(p: PolygonData) -> PolygonData:
    """
    The SL(2) image of a quadrilateral with P_0 = (1, 0) and P_1 = (0, s[0]); then P_2 = (-s[1] / s[0], v[1]) and
    P_3 = (-v[2] / s[0], -s[3]).
    """
    if p.n != 4:
        raise WrongArityError(f'Quadrilateral normal frame needs n = 4, got {p.n}.')
    p0, p1 = p.vertex(0), p.vertex(1)
    s0 = bracket(p0, p1)
    one = s0 ** 0
    m = Mat2(one, 0 * one, 0 * one, s0) @ Mat2.from_columns(p0, p1).inverse()
    return act(m, p)


def quad_partner_quadratic(p: PolygonData, c: SCALAR_TYPE) -> tuple[SCALAR_TYPE, SCALAR_TYPE, SCALAR_TYPE]:
    """
    The quadratic b^2 + u b + v = 0 for the line parameter b of the partner's first vertex.

    In the normal frame Q_0 = (b, c). Writing S_1, S_3, S_5, S_7 for s[0..3] and V_2 = v[1],

        u = (c / V_2) ((S_1^2 - S_3^2 - S_5^2 - S_7^2) + 2 S_3 S_5 S_7 / S_1) / (S_5 S_7 - S_1 S_3)
        v = (c^2 - S_1^2)(S_3 S_5 - S_1 S_7)(S_3 S_7 - S_1 S_5) / (V_2^2 S_1^2 (S_5 S_7 - S_1 S_3))

    Args:
        p: A quadrilateral, in any frame.
        c: The constant.

    Returns:
        (u, v, u^2 - 4v). A real partner exists iff the discriminant is nonnegative.

    Raises:
        DegenerateQuadError: v[1] = 0 or S_5 S_7 = S_1 S_3.

    """
    sv = sv_coords(quad_normal_frame(p))
    s1, s3, s5, s7 = sv.s
    v2 = sv.v[1]
    den = s5 * s7 - s1 * s3
    if is_zero(v2) or is_zero(den):
        raise DegenerateQuadError('The partner quadratic degenerates.')
    u = c / v2 * ((s1 ** 2 - s3 ** 2 - s5 ** 2 - s7 ** 2) + 2 * s3 * s5 * s7 / s1) / den
    v = (c * c - s1 * s1) * (s3 * s5 - s1 * s7) * (s3 * s7 - s1 * s5) / (v2 * v2 * s1 * s1 * den)
    return u, v, u * u - 4 * v


def quad_lax_quadratic(p: PolygonData, c: SCALAR_TYPE) -> tuple[SCALAR_TYPE, SCALAR_TYPE]:
    """
    The same (u, v) read off the fixed-point equation of the Lax map: u = (delta - alpha) / gamma, v = -beta / gamma.
    """
    alpha, beta, gamma, delta = lax_matrix(sv_coords(p), c).m.entries()
    if is_zero(gamma):
        raise DegenerateQuadError('The Lax map fixes infinity.')
    return (delta - alpha) / gamma, -beta / gamma


def quad_cond4(s: Sequence[SCALAR_TYPE], c: SCALAR_TYPE) -> tuple[SCALAR_TYPE, SCALAR_TYPE]:
    """
    Both sides of the existence inequality lhs >= rhs for quadrilaterals with sides s.

    The discriminant of quad_partner_quadratic equals (lhs - rhs) / (v[1]^2 (S_5 S_7 - S_1 S_3)^2).
    """
    s1, s3, s5, s7 = s
    lhs = c * c * (s1 + s3 - s5 - s7) * (s1 - s3 + s5 - s7) * (s1 - s3 - s5 + s7) * (s1 + s3 + s5 + s7)
    rhs = 4 * (s3 * s5 - s1 * s7) * (s3 * s7 - s1 * s5) * (s1 * s3 - s5 * s7)
    return lhs, rhs


def quad_ellipse_product(s: Sequence[SCALAR_TYPE]) -> SCALAR_TYPE:
    s1, s3, s5, s7 = s
    return (s1 + s3 + s5 + s7) * (s1 + s3 - s5 - s7) * (s3 + s5 - s7 - s1) * (s5 + s7 - s1 - s3)


def _fit(first: Sequence[Vec2], second: Sequence[Vec2]) -> QuadraticForm:
    def row(a: Vec2, b: Vec2) -> tuple:
        return a.x * a.x - b.x * b.x, a.x * a.y - b.x * b.y, a.y * a.y - b.y * b.y

    r, t = row(*first), row(*second)
    m = r[1] * t[2] - r[2] * t[1]
    two_n = r[2] * t[0] - r[0] * t[2]
    k = r[0] * t[1] - r[1] * t[0]
    if all(is_zero(x) for x in (m, two_n, k)):
        raise FitSingularError('The conic fit degenerates.')
    return QuadraticForm(m, -two_n, k)


def conic_kind(form: QuadraticForm) -> ConicKind:
    """
    Ellipse, hyperbola or degenerate from the sign of mk - n^2 = -(discriminant) / 4.
    """
    det = -form.discriminant()
    scale = max(abs(float(x)) for x in form.coefficients()) ** 2
    if is_zero(det, info.tolerances.float_equal * scale):
        return ConicKind.DEGENERATE
    return ConicKind.ELLIPSE if det > 0 else ConicKind.HYPERBOLA


def quad_conics(p: PolygonData, q: PolygonData) -> tuple[QuadraticForm, QuadraticForm, ConicKind]:
    """
    The central conics through P_1, P_3, Q_0, Q_2 and through P_0, P_2, Q_1, Q_3 of a c-related pair.

    Each form takes equal values on the two P vertices and on the two Q vertices it passes through.

    Args:
        p: A quadrilateral.
        q: A c-related quadrilateral.

    Returns:
        (first form, second form, kind of the first form).

    Raises:
        FitSingularError: The equal-value conditions are dependent.

    """
    if p.n != 4 or q.n != 4:
        raise WrongArityError('Quadrilateral conics need two quadrilaterals.')
    P, Q = p.vertices, q.vertices
    first = _fit((P[1], P[3]), (Q[0], Q[2]))
    second = _fit((P[0], P[2]), (Q[1], Q[3]))
    return first, second, conic_kind(first)


def conic_levels(form: QuadraticForm, points: Sequence[Vec2]) -> list[SCALAR_TYPE]:
    return [form.evaluate(x) for x in points]


# ======================== PENTAGONS ===================================================================================
def pentagon_chart(x: SCALAR_TYPE, y: SCALAR_TYPE, s: Sequence[SCALAR_TYPE]) -> SVCoords:
    """
    The coordinates of the closed pentagon with sides s, v[1] = x and v[4] = y.

    The Ptolemy-Plucker relations give v[2] = (s[0] s[2] - s[1] y) / x, v[3] = (s[2] s[4] - s[3] x) / y and
    v[0] = (s[0] s[3] x + s[1] s[4] y - s[0] s[2] s[4]) / (xy).

    Args:
        x: v[1].
        y: v[4].
        s: Five side brackets.

    Returns:
        The SVCoords.

    Raises:
        ChartSingularError: x or y vanishes, or a derived diagonal vanishes.

    """
    if len(s) != 5:
        raise WrongArityError(f'A pentagon chart needs 5 sides, got {len(s)}.')
    if is_zero(x) or is_zero(y):
        raise ChartSingularError('Chart coordinates must be nonzero.')
    s0, s1, s2, s3, s4 = s
    v = [(s0 * s3 * x + s1 * s4 * y - s0 * s2 * s4) / (x * y), x, (s0 * s2 - s1 * y) / x, (s2 * s4 - s3 * x) / y, y]
    for i, value in enumerate(v):
        if is_zero(value):
            raise ChartSingularError('Derived diagonal vanishes.', i)
    return SVCoords(list(s), v)


def chart_from_sv(sv: SVCoords) -> PentagonChart:
    if sv.n != 5:
        raise WrongArityError(f'A pentagon chart needs n = 5, got {sv.n}.')
    return PentagonChart(sv.v[1], sv.v[4], sv.s)


def chart_sv(chart: PentagonChart) -> SVCoords:
    return pentagon_chart(chart.x, chart.y, chart.s)


def chart_polygon(chart: PentagonChart) -> PolygonData:
    """
    The closed pentagon of a chart point in the standard frame.
    """
    sv = chart_sv(chart)
    return reconstruct(sv, standard_frame(sv))


def pentagon_K(chart: PentagonChart) -> SCALAR_TYPE:
    """
    The integral K = sum v[i] / (s[i-1] s[i]) written on the chart.

    Examples:
        regular pentagon with unit sides, x = y = 2 cos 72 -> K = 3.09017
    """
    x, y = chart.x, chart.y
    s0, s1, s2, s3, s4 = chart.s
    return (x / (s0 * s1) + y / (s3 * s4) + (s0 * s0 + s1 * s1) / (s0 * s1 * x) + (s3 * s3 + s4 * s4) / (s3 * s4 * y)
            - x / (s2 * y) - y / (s2 * x) - s2 / (x * y))


def pentagon_K_gradient(chart: PentagonChart) -> tuple[SCALAR_TYPE, SCALAR_TYPE]:
    x, y = chart.x, chart.y
    s0, s1, s2, s3, s4 = chart.s
    kx = 1 / (s0 * s1) - (s0 * s0 + s1 * s1) / (s0 * s1 * x * x) - 1 / (s2 * y) + y / (s2 * x * x) + s2 / (x * x * y)
    ky = 1 / (s3 * s4) - (s3 * s3 + s4 * s4) / (s3 * s4 * y * y) + x / (s2 * y * y) - 1 / (s2 * x) + s2 / (x * y * y)
    return kx, ky


def pentagon_flow(chart: PentagonChart) -> tuple[SCALAR_TYPE, SCALAR_TYPE]:
    """
    The vector field on the chart.

        dx/dt = x (g_2 - g_3 + g_4 - g_0) + s[1] / s[0] - s[0] / s[1]
        dy/dt = y (g_0 - g_1 + g_2 - g_3) + s[4] / s[3] - s[3] / s[4]

    with g_i = v[i] / (s[i-1] s[i]).
    """
    sv = chart_sv(chart)
    s = sv.s
    g = [sv.v[i] / (s[i - 1] * s[i]) for i in range(5)]
    dx = chart.x * (g[2] - g[3] + g[4] - g[0]) + s[1] / s[0] - s[0] / s[1]
    dy = chart.y * (g[0] - g[1] + g[2] - g[3]) + s[4] / s[3] - s[3] / s[4]
    return dx, dy


def pentagon_flow_check(chart: PentagonChart) -> tuple[SCALAR_TYPE, SCALAR_TYPE]:
    """
    Residuals of the Hamiltonian identity and of the agreement with the general vector field.

    The identity i_xi omega = dK for omega = dx ^ dy / (xy) means dx/dt = xy K_y and dy/dt = -xy K_x.

    Returns:
        (Hamiltonian residual, residual against xi_field at v[1] and v[4]); both exactly zero over fractions.

    Raises:
        ChartSingularError: The chart point is singular.

    """
    from .integrals_flow import xi_field

    dx, dy = pentagon_flow(chart)
    kx, ky = pentagon_K_gradient(chart)
    xy = chart.x * chart.y
    hamiltonian = max(abs(dx - xy * ky), abs(dy + xy * kx))
    field = xi_field(chart_sv(chart))
    return hamiltonian, max(abs(dx - field[1]), abs(dy - field[4]))


def pentagon_discriminant(s: Sequence[SCALAR_TYPE], c: SCALAR_TYPE) -> tuple[SCALAR_TYPE, list[SCALAR_TYPE]]:
    """
    D = prod(c^2 - s[j]^2) and, when D > 0, the ends K_- <= K_+ of the forbidden band.

    Examples:
        s = (1, 1, 1, 1, 1), c = sqrt(2) -> D = 1, K = 2 -+ sqrt(2)

    Args:
        s: Five side brackets.
        c: The nonzero constant.

    Returns:
        (D, roots); roots is empty unless D > 0.

    """
    dd = prod(c * c - x * x for x in s)
    if dd <= 0:
        return dd, []
    product = prod(s)
    middle = (sum(x * x for x in s) - 2 * c * c) * c * c / product
    half_width = 2 * sqrt(dd) / (c * product)
    return dd, sorted([middle - half_width, middle + half_width])


def pentagon_partner_exists(s: Sequence[SCALAR_TYPE], c: SCALAR_TYPE, K: SCALAR_TYPE) -> bool:
    """
    Prediction from pentagon_discriminant: partners exist unless K lies strictly inside the forbidden band.
    """
    _, roots = pentagon_discriminant(s, c)
    return not roots or not roots[0] < K < roots[1]


def level_curve_points(s: Sequence[SCALAR_TYPE], K: SCALAR_TYPE, xs: Sequence[SCALAR_TYPE]) -> list[PentagonChart]:
    """
    Chart points with pentagon_K = K above the given x values.

    Multiplying K by xy gives a quadratic in y:

        (x / (s[3] s[4]) - 1 / s[2]) y^2 + (x^2 / (s[0] s[1]) + (s[0]^2 + s[1]^2) / (s[0] s[1]) - K x) y
            + (s[3]^2 + s[4]^2) x / (s[3] s[4]) - x^2 / s[2] - s[2] = 0

    Singular chart points are skipped.
    """
    s0, s1, s2, s3, s4 = s
    points = []
    for x in xs:
        a = x / (s3 * s4) - 1 / s2
        b = x * x / (s0 * s1) + (s0 * s0 + s1 * s1) / (s0 * s1) - K * x
        c = (s3 * s3 + s4 * s4) * x / (s3 * s4) - x * x / s2 - s2
        if is_zero(a):
            ys = [] if is_zero(b) else [-c / b]
        else:
            ys = fixed_point_roots(Mat2(-b, -c, a, 0 * a))
        for y in ys:
            try:
                pentagon_chart(x, y, s)
            except (ChartSingularError, ZeroDivisionError):
                continue
            points.append(PentagonChart(x, y, s))
    return points


def orbit_period(chart: PentagonChart, c: SCALAR_TYPE, max_period: Optional[int] = None,
                 tol: Optional[float] = None) -> Optional[int]:
    """
    The smallest m <= max_period whose c-dynamics iterate has the coordinates of the start, or None.

    Raises:
        NoRealPartnerError: The orbit leaves the region where partners exist.
        BranchLostError: The branch cannot be continued.

    """
    max_period = info.defaults.max_period if max_period is None else max_period
    tol = info.tolerances.period if tol is None else tol
    start = chart_sv(chart)
    orbit = iterate_c_dynamics(chart_polygon(chart), c, max_period)
    for m, polygon in enumerate(orbit[1:], start=1):
        if sv_coords(polygon).is_close(start, tol):
            logger.debug('period %d found for %s', m, chart)
            return m
    return None


def level_curve_periods(s: Sequence[SCALAR_TYPE], K: SCALAR_TYPE, c: SCALAR_TYPE, xs: Sequence[SCALAR_TYPE],
                        max_period: Optional[int] = None, tol: Optional[float] = None) -> list[Optional[int]]:
    """
    orbit_period at every point of the level curve K above xs. On one level curve the periods agree.

    Points whose orbit cannot be continued are left out.

    Args:
        s: Five side brackets.
        K: The level.
        c: The constant.
        xs: Chart x values to sample.
        max_period: Longest period looked for.
        tol: Coordinate tolerance of the return test.

    Returns:
        One period, or None, per usable point.

    """
    periods = []
    for chart in level_curve_points(s, K, xs):
        try:
            periods.append(orbit_period(chart, c, max_period, tol))
        except CpdynError as err:
            logger.debug('no period at %s: %s', chart, err)
    return periods


def zone_grid(s: Sequence[SCALAR_TYPE], cs: Sequence[SCALAR_TYPE],
              Ks: Sequence[SCALAR_TYPE]) -> list[tuple[SCALAR_TYPE, SCALAR_TYPE, bool]]:
    """
    Rows (c, K, predicted existence) over a grid of constants and integral values.
    """
    return [(c, K, pentagon_partner_exists(s, c, K)) for c in cs for K in Ks]


def solver_partner_exists(chart: PentagonChart, c: SCALAR_TYPE) -> bool:
    """
    Whether solve_c_related finds a partner of the chart pentagon.
    """
    solutions = solve_c_related(chart_polygon(chart), c)
    return isinstance(solutions, AllRelated) or bool(solutions)


def chart_grid(s: Sequence[SCALAR_TYPE], bound: float, size: int) -> np.ndarray:
    """
    A size x size grid of nonsingular float chart points in [-bound, bound]^2 with their K values, rows (x, y, K).
    """
    rows = []
    for x in np.linspace(-bound, bound, size):
        for y in np.linspace(-bound, bound, size):
            try:
                chart = PentagonChart(float(x), float(y), s)
                chart_sv(chart)
            except ChartSingularError:
                continue
            rows.append((float(x), float(y), float(pentagon_K(chart))))
    return np.array(rows)
