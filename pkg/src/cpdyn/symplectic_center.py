"""
The presymplectic form on polygons with fixed side brackets, the quadratic Hamiltonians I, J, K and the center.

For a closed polygon with vertices P_i = (x_i, y_i):

    I = sum s[i] x_i x_{i+1}
    J = sum s[i] (x_i y_{i+1} + x_{i+1} y_i)
    K = sum s[i] y_i y_{i+1}

The center is the quadratic form I x^2 - J xy + K y^2. Its discriminant J^2 - 4IK is minus the Casimir 4IK - J^2,
which descends to the moduli space.

General Documentation:
    Tangent vectors are per-vertex displacements U. They are tangent to the fixed-side stratum when
    [U_i, P_{i+1}] + [P_i, U_{i+1}] = 0 for every i. The form is

        omega(U, V) = sum s[i] ([U_i, V_{i+1}] + [U_{i+1}, V_i]).

    The infinitesimal SL(2) action has generators e = (0, x), h = (x, -y), f = (y, 0). With the side brackets frozen,

        omega(e, V) = -dI(V),  omega(h, V) = dJ(V),  omega(f, V) = dK(V).

    For a triangle the center is -(s[0] s[1] s[2]) times the circumscribed central conic with its x^2 and y^2
    coefficients exchanged.
"""

import logging

from math import prod
from typing import Optional, Sequence

from .config import info
from .errors import NotTangentError, WrongArityError
from .core_polygon import (SCALAR_TYPE, Mat2, PolygonData, Vec2, bracket, close, format_scalar, is_zero, parse_scalar,
                           solve_linear)

SL2_KINDS = ('e', 'h', 'f')

logger = logging.getLogger(__name__)


# ======================== CLASSES =====================================================================================
class TangentVector:
    """
    Class storing a displacement U_i for every vertex of a polygon.
    """

    def __init__(self, vectors: Sequence[Vec2]) -> None:
        self.vectors = list(vectors)

    def __str__(self) -> str:
        return 'TangentVector(' + ', '.join(str(u) for u in self.vectors) + ')'

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, i: int) -> Vec2:
        return self.vectors[i % len(self.vectors)]

    def side_defects(self, p: PolygonData) -> list[SCALAR_TYPE]:
        """
        First-order change d[P_i, P_{i+1}](U) of every side bracket.
        """
        return [bracket(self[i], p.vertex(i + 1)) + bracket(p.vertex(i), self[i + 1]) for i in range(p.n)]

    def is_tangent(self, p: PolygonData, tol: Optional[float] = None) -> bool:
        tol = info.tolerances.tangency if tol is None else tol
        return len(self) == p.n and all(is_zero(d, tol) for d in self.side_defects(p))


class QuadraticForm:
    """
    Class representing the binary quadratic form a x^2 - b xy + c y^2.
    """

    def __init__(self, a: SCALAR_TYPE, b: SCALAR_TYPE, c: SCALAR_TYPE) -> None:
        self.a = a
        self.b = b
        self.c = c

    def __str__(self) -> str:
        return f'{self.a} x^2 - {self.b} xy + {self.c} y^2'

    def __repr__(self) -> str:
        return f'QuadraticForm({self.a!r}, {self.b!r}, {self.c!r})'

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadraticForm) and (self.a, self.b, self.c) == (other.a, other.b, other.c)

    def __add__(self, other: 'QuadraticForm') -> 'QuadraticForm':
        return QuadraticForm(self.a + other.a, self.b + other.b, self.c + other.c)

    def __mul__(self, scalar: SCALAR_TYPE) -> 'QuadraticForm':
        return QuadraticForm(self.a * scalar, self.b * scalar, self.c * scalar)

    __rmul__ = __mul__

    def coefficients(self) -> tuple[SCALAR_TYPE, SCALAR_TYPE, SCALAR_TYPE]:
        return self.a, self.b, self.c

    def evaluate(self, point: Vec2) -> SCALAR_TYPE:
        return self.a * point.x ** 2 - self.b * point.x * point.y + self.c * point.y ** 2

    def discriminant(self) -> SCALAR_TYPE:
        """
        b^2 - 4ac, invariant under pullback by SL(2).
        """
        return self.b ** 2 - 4 * self.a * self.c

    def pullback(self, m: Mat2) -> 'QuadraticForm':
        """
        The form X -> self(m X).
        """
        a, b, c, d = m.entries()
        return QuadraticForm(self.a * a * a - self.b * a * c + self.c * c * c,
                             -(2 * self.a * a * b - self.b * (a * d + b * c) + 2 * self.c * c * d),
                             self.a * b * b - self.b * b * d + self.c * d * d)

    def swap(self) -> 'QuadraticForm':
        """
        Exchanges the x^2 and y^2 coefficients.
        """
        return QuadraticForm(self.c, self.b, self.a)

    def is_close(self, other: 'QuadraticForm', tol: Optional[float] = None) -> bool:
        return all(close(x, y, tol) for x, y in zip(self.coefficients(), other.coefficients()))

    def is_proportional(self, other: 'QuadraticForm', tol: Optional[float] = None) -> bool:
        """
        Whether the coefficient vectors are parallel.
        """
        u, w = self.coefficients(), other.coefficients()
        return all(close(u[i] * w[j], u[j] * w[i], tol) for i in range(3) for j in range(i + 1, 3))

    def to_json(self) -> dict:
        return {'a': format_scalar(self.a), 'b': format_scalar(self.b), 'c': format_scalar(self.c)}

    @classmethod
    def from_json(cls, data, backend: Optional[str] = None):
        """
        Converts dictionary from JSON read to object.
        """
        return cls(*(parse_scalar(data[key], backend) for key in ('a', 'b', 'c')))


# ======================== FORM AND HAMILTONIANS =======================================================================
def _sides(p: PolygonData) -> list[SCALAR_TYPE]:
    return [bracket(p.vertex(i), p.vertex(i + 1)) for i in range(p.n)]


def omega(p: PolygonData, U: TangentVector, V: TangentVector, tol: Optional[float] = None) -> SCALAR_TYPE:
    """
    Evaluates omega = sum s[i] (dx_i ^ dy_{i+1} + dx_{i+1} ^ dy_i) on two tangent vectors.

    Args:
        p: A closed polygon.
        U: First tangent vector.
        V: Second tangent vector.
        tol: Tangency tolerance for floats, tangency from info.json by default.

    Returns:
        omega(U, V).

    Raises:
        NotTangentError: U or V changes a side bracket to first order.

    """
    for name, w in (('U', U), ('V', V)):
        if not w.is_tangent(p, tol):
            raise NotTangentError(f'{name} is not tangent to the fixed-side stratum.')
    s = _sides(p)
    return sum(s[i] * (bracket(U[i], V[i + 1]) + bracket(U[i + 1], V[i])) for i in range(p.n))


def ijk(p: PolygonData) -> tuple[SCALAR_TYPE, SCALAR_TYPE, SCALAR_TYPE]:
    """
    The Hamiltonians I, J, K.

    Examples:
        (1, 0), (0, 1), (-1, -1) -> (-1, -1, -1)

    Args:
        p: A closed polygon.

    Returns:
        (I, J, K).

    """
    s = _sides(p)
    I = J = K = 0 * s[0]
    for i in range(p.n):
        a, b = p.vertex(i), p.vertex(i + 1)
        I += s[i] * a.x * b.x
        J += s[i] * (a.x * b.y + b.x * a.y)
        K += s[i] * a.y * b.y
    return I, J, K


def ijk_differential(p: PolygonData, U: TangentVector) -> tuple[SCALAR_TYPE, SCALAR_TYPE, SCALAR_TYPE]:
    """
    (dI, dJ, dK)(U) with the side brackets held fixed.
    """
    s = _sides(p)
    dI = dJ = dK = 0 * s[0]
    for i in range(p.n):
        a, b, u, w = p.vertex(i), p.vertex(i + 1), U[i], U[i + 1]
        dI += s[i] * (u.x * b.x + a.x * w.x)
        dJ += s[i] * (u.x * b.y + a.x * w.y + w.x * a.y + b.x * u.y)
        dK += s[i] * (u.y * b.y + a.y * w.y)
    return dI, dJ, dK


def sl2_field(p: PolygonData, kind: str) -> TangentVector:
    """
    The infinitesimal SL(2) action: e = (0, x), h = (x, -y), f = (y, 0) at every vertex.
    """
    if kind == 'e':
        return TangentVector([Vec2(0 * q.x, q.x) for q in p.vertices])
    if kind == 'h':
        return TangentVector([Vec2(q.x, -q.y) for q in p.vertices])
    if kind == 'f':
        return TangentVector([Vec2(q.y, 0 * q.y) for q in p.vertices])
    raise ValueError(f'Unknown sl(2) generator {kind!r}, expected one of {SL2_KINDS}.')


def casimir(p: PolygonData) -> SCALAR_TYPE:
    """
    4IK - J^2.
    """
    I, J, K = ijk(p)
    return 4 * I * K - J ** 2


def casimir_bracket_sum(p: PolygonData) -> SCALAR_TYPE:
    """
    sum_{k,l} s[k] s[l] ([P_k, P_l] [P_{k+1}, P_{l+1}] + [P_k, P_{l+1}] [P_{k+1}, P_l]), equal to 4IK - J^2.
    """
    n = p.n
    s = _sides(p)
    total = 0 * s[0]
    for k in range(n):
        for l in range(n):
            total += s[k] * s[l] * (bracket(p.vertex(k), p.vertex(l)) * bracket(p.vertex(k + 1), p.vertex(l + 1)) +
                                    bracket(p.vertex(k), p.vertex(l + 1)) * bracket(p.vertex(k + 1), p.vertex(l)))
    return total


# ======================== CENTER ======================================================================================
def center(p: PolygonData) -> QuadraticForm:
    """
    The center I x^2 - J xy + K y^2 of a closed polygon.

    Under P -> M P the center pulls back by center_action(M).
    """
    return QuadraticForm(*ijk(p))


def center_action(m: Mat2) -> Mat2:
    """
    The matrix F M^{-1} F, F the coordinate swap: center(act(m, p)) = center(p).pullback(center_action(m)).
    """
    a, b, c, d = m.entries()
    return Mat2(a, -c, -b, d)


def cut(p: PolygonData, k: int) -> tuple[PolygonData, PolygonData]:
    """
    Cuts along the diagonal P_0 P_k into (P_0, ..., P_k) and (P_0, P_k, ..., P_{n-1}).

    The centers of the two pieces add up to the center of p.

    Raises:
        WrongArityError: k is not in 2..n-2.

    """
    if not 2 <= k <= p.n - 2:
        raise WrongArityError(f'Diagonal cut needs 2 <= k <= n - 2, got k={k} for n={p.n}.')
    return (PolygonData(p.vertices[:k + 1], True),
            PolygonData(p.vertices[:1] + p.vertices[k:], True))


def circumconic(tri: Sequence[Vec2]) -> QuadraticForm:
    """
    The central conic a x^2 - b xy + c y^2 = 1 through three points.

    Examples:
        (1, 0), (0, 1), (-1, -1) -> x^2 - xy + y^2

    Args:
        tri: Three points.

    Returns:
        The form (a, b, c).

    Raises:
        SingularSystemError: The 3 x 3 system is singular.

    """
    if len(tri) != 3:
        raise WrongArityError(f'A circumscribed conic needs 3 points, got {len(tri)}.')
    rows = [[q.x * q.x, -q.x * q.y, q.y * q.y] for q in tri]
    return QuadraticForm(*solve_linear(rows, [1, 1, 1]))


def center_conic_constant(tri: Sequence[Vec2]) -> SCALAR_TYPE:
    """
    The constant k = -(s[0] s[1] s[2]) with center(tri) = k * circumconic(tri).swap().
    """
    return -prod(bracket(tri[i], tri[(i + 1) % 3]) for i in range(3))
