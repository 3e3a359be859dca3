"""
The core polygon module defines the centroaffine primitives and the moduli coordinates of polygons.

A polygon is stored as one fundamental period of vertices together with its monodromy, the SL(2) matrix taking P_i to
P_{i+n}. Closed polygons have identity monodromy. From the vertices one computes the side brackets s and the short
diagonal brackets v; conversely reconstruct rebuilds the vertices from (s, v) and a starting frame.

The module also holds the continuant machinery, which expresses the monodromy and the closure conditions as
determinants of tridiagonal matrices, and the Ptolemy-Plucker relations for quadrilaterals and pentagons.

General Documentation:
    Indexing is 0-based and cyclic throughout:

    - s[i] = [P_i, P_{i+1}]
    - v[i] = [P_{i-1}, P_{i+1}]

    Scalars are either fractions.Fraction (exact) or float. Every function works with both; comparisons against zero
    are exact for fractions and use the float_equal tolerance from info.json for floats.

    Continuants are written D_{i,j} for the determinant of the (j - i) x (j - i) tridiagonal matrix with diagonal
    a_i, ..., a_{j-1}, superdiagonal b_{i+1}, ..., b_{j-1} and unit subdiagonal, so that D_{i,i} = 1, D_{i,i-1} = 0 and
    D_{i,j+1} = a_j D_{i,j} - b_j D_{i,j-1}.
"""

import logging
import numpy as np

from math import isqrt, prod
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .config import info
from .errors import DegeneratePolygonError, FrameMismatchError, IndexOrderError, SingularSystemError, WrongArityError

SCALAR_TYPE = Fraction | float
BACKENDS = ('rational', 'float')

logger = logging.getLogger(__name__)


# ======================== CLASSES =====================================================================================
class Vec2:
    """
    Class representing a plane vector with scalar coordinates x and y.
    """
    __slots__ = ('x', 'y')

    def __init__(self, x: SCALAR_TYPE, y: SCALAR_TYPE) -> None:
        self.x = x
        self.y = y

    def __add__(self, other: 'Vec2') -> 'Vec2':
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: 'Vec2') -> 'Vec2':
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> 'Vec2':
        return Vec2(-self.x, -self.y)

    def __mul__(self, scalar: SCALAR_TYPE) -> 'Vec2':
        return Vec2(self.x * scalar, self.y * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar: SCALAR_TYPE) -> 'Vec2':
        return Vec2(self.x / scalar, self.y / scalar)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vec2) and self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f'Vec2({self.x}, {self.y})'

    def __str__(self) -> str:
        return f'({self.x}, {self.y})'

    def norm(self) -> float:
        return float(np.hypot(float(self.x), float(self.y)))

    def to_json(self) -> list[str]:
        return [format_scalar(self.x), format_scalar(self.y)]

    @classmethod
    def from_json(cls, data, backend: Optional[str] = None):
        """
        Converts list from JSON read to object.
        Args:
            data: The [x, y] list.
            backend: Optional scalar backend forcing the scalar type.

        Returns:
            The object.

        """
        return cls(parse_scalar(data[0], backend), parse_scalar(data[1], backend))


class Mat2:
    """
    Class representing a real 2x2 matrix in row-major order [[a, b], [c, d]].

    Used for monodromies, SL(2) elements and the Mobius maps of the Lax construction.
    """
    __slots__ = ('a', 'b', 'c', 'd')

    def __init__(self, a: SCALAR_TYPE, b: SCALAR_TYPE, c: SCALAR_TYPE, d: SCALAR_TYPE) -> None:
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    @classmethod
    def identity(cls, like: SCALAR_TYPE = Fraction(1)) -> 'Mat2':
        one = like ** 0
        return cls(one, 0 * one, 0 * one, one)

    @classmethod
    def from_columns(cls, first: Vec2, second: Vec2) -> 'Mat2':
        return cls(first.x, second.x, first.y, second.y)

    def __matmul__(self, other):
        if isinstance(other, Vec2):
            return Vec2(self.a * other.x + self.b * other.y, self.c * other.x + self.d * other.y)
        return Mat2(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def __mul__(self, scalar: SCALAR_TYPE) -> 'Mat2':
        return Mat2(self.a * scalar, self.b * scalar, self.c * scalar, self.d * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> 'Mat2':
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: 'Mat2') -> 'Mat2':
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat2) and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f'Mat2({self.a}, {self.b}, {self.c}, {self.d})'

    def __str__(self) -> str:
        return f'[[{self.a}, {self.b}], [{self.c}, {self.d}]]'

    def entries(self) -> tuple[SCALAR_TYPE, SCALAR_TYPE, SCALAR_TYPE, SCALAR_TYPE]:
        return self.a, self.b, self.c, self.d

    def det(self) -> SCALAR_TYPE:
        return self.a * self.d - self.b * self.c

    def trace(self) -> SCALAR_TYPE:
        return self.a + self.d

    def transpose(self) -> 'Mat2':
        return Mat2(self.a, self.c, self.b, self.d)

    def inverse(self) -> 'Mat2':
        det = self.det()
        if is_zero(det):
            raise ZeroDivisionError('Singular matrix has no inverse.')
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def power(self, k: int) -> 'Mat2':
        """
        Integer power, negative exponents through the inverse.
        """
        base = self if k >= 0 else self.inverse()
        result = Mat2.identity(self.a if is_exact(self.a) else 1.0)
        for _ in range(abs(k)):
            result = base @ result
        return result

    def is_identity(self, tol: Optional[float] = None) -> bool:
        one = Mat2.identity()
        return all(close(x, y, tol) for x, y in zip(self.entries(), one.entries()))

    def is_close(self, other: 'Mat2', tol: Optional[float] = None) -> bool:
        return all(close(x, y, tol) for x, y in zip(self.entries(), other.entries()))

    def to_json(self) -> list[list[str]]:
        return [[format_scalar(self.a), format_scalar(self.b)], [format_scalar(self.c), format_scalar(self.d)]]

    @classmethod
    def from_json(cls, data, backend: Optional[str] = None):
        """
        Converts nested list from JSON read to object.
        Args:
            data: The [[a, b], [c, d]] list.
            backend: Optional scalar backend forcing the scalar type.

        Returns:
            The object.

        """
        (a, b), (c, d) = data
        return cls(*(parse_scalar(x, backend) for x in (a, b, c, d)))


class PolygonData:
    """
    Class representing a closed or twisted polygon: n vertices, a closure flag and the monodromy.

    Vertices outside 0..n-1 are obtained through the monodromy, P_{i+kn} = M^k P_i.
    """

    def __init__(self, vertices: Sequence[Vec2], closed: bool = True, monodromy: Optional[Mat2] = None) -> None:
        if len(vertices) < 3:
            raise WrongArityError(f'A polygon needs at least 3 vertices, got {len(vertices)}.')
        self.vertices = tuple(vertices)
        self.closed = closed
        if monodromy is None:
            monodromy = Mat2.identity(vertices[0].x if is_exact(vertices[0].x) else 1.0)
        self.monodromy = monodromy

    def __str__(self) -> str:
        kind = 'closed' if self.closed else 'twisted'
        return f'{kind} {self.n}-gon ' + ', '.join(str(p) for p in self.vertices)

    def __repr__(self) -> str:
        return f'PolygonData({list(self.vertices)!r}, closed={self.closed})'

    def __eq__(self, other) -> bool:
        return isinstance(other, PolygonData) and self.vertices == other.vertices and \
            self.closed == other.closed and self.monodromy == other.monodromy

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Vec2:
        """
        Vertex P_i for any integer i, wrapping through the monodromy.
        """
        k, r = divmod(i, self.n)
        if k == 0 or self.closed:
            return self.vertices[r]
        return self.monodromy.power(k) @ self.vertices[r]

    def with_vertex(self, j: int, point: Vec2) -> 'PolygonData':
        """
        Copy with P_j (taken modulo n) replaced.
        """
        vertices = list(self.vertices)
        vertices[j % self.n] = point
        return PolygonData(vertices, self.closed, self.monodromy)

    def negated(self) -> 'PolygonData':
        return PolygonData([-p for p in self.vertices], self.closed, self.monodromy)

    def validate(self) -> 'PolygonData':
        """
        Checks the polygon invariants: nonzero side and short diagonal brackets, unit monodromy determinant.

        Returns:
            The polygon itself.

        Raises:
            DegeneratePolygonError: An invariant fails.

        """
        if not close(self.monodromy.det(), 1):
            raise DegeneratePolygonError(f'Monodromy determinant is {self.monodromy.det()}, not 1.')
        sv_coords(self)
        return self

    def to_json(self) -> dict:
        return {'n': self.n, 'closed': self.closed, 'vertices': [p.to_json() for p in self.vertices],
                'monodromy': self.monodromy.to_json()}

    @classmethod
    def from_json(cls, data, backend: Optional[str] = None):
        """
        Converts dictionary from JSON read to object.
        Args:
            data: The dictionary.
            backend: Optional scalar backend forcing the scalar type.

        Returns:
            The object.

        """
        vertices = [Vec2.from_json(p, backend) for p in data['vertices']]
        if 'n' in data and data['n'] != len(vertices):
            raise WrongArityError(f'Declared n={data["n"]} but {len(vertices)} vertices were given.')
        monodromy = Mat2.from_json(data['monodromy'], backend) if 'monodromy' in data else None
        return cls(vertices, data.get('closed', True), monodromy)


class SVCoords:
    """
    Class representing the moduli coordinates (s, v) of a polygon.
    """

    def __init__(self, s: Sequence[SCALAR_TYPE], v: Sequence[SCALAR_TYPE]) -> None:
        if len(s) != len(v):
            raise WrongArityError(f'The s and v arrays differ in length ({len(s)} and {len(v)}).')
        self.s = tuple(s)
        self.v = tuple(v)

    def __str__(self) -> str:
        return f's=({", ".join(map(str, self.s))}), v=({", ".join(map(str, self.v))})'

    def __repr__(self) -> str:
        return f'SVCoords({list(self.s)!r}, {list(self.v)!r})'

    def __eq__(self, other) -> bool:
        return isinstance(other, SVCoords) and self.s == other.s and self.v == other.v

    def __hash__(self) -> int:
        return hash((self.s, self.v))

    @property
    def n(self) -> int:
        return len(self.s)

    def side(self, i: int) -> SCALAR_TYPE:
        return self.s[i % self.n]

    def diagonal(self, i: int) -> SCALAR_TYPE:
        return self.v[i % self.n]

    def is_close(self, other: 'SVCoords', tol: Optional[float] = None) -> bool:
        return self.n == other.n and all(close(x, y, tol) for x, y in zip(self.s + self.v, other.s + other.v))

    def to_json(self) -> dict:
        return {'s': [format_scalar(x) for x in self.s], 'v': [format_scalar(x) for x in self.v]}

    @classmethod
    def from_json(cls, data, backend: Optional[str] = None):
        """
        Converts dictionary from JSON read to object.
        Args:
            data: The dictionary.
            backend: Optional scalar backend forcing the scalar type.

        Returns:
            The object.

        """
        return cls([parse_scalar(x, backend) for x in data['s']], [parse_scalar(x, backend) for x in data['v']])


# ======================== USEFUL FUNCTIONS (SCALARS) ==================================================================
def is_exact(x) -> bool:
    """
    Whether a scalar belongs to the exact rational realization.
    """
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


def is_zero(x: SCALAR_TYPE, tol: Optional[float] = None) -> bool:
    """
    Zero test: exact for fractions, absolute tolerance for floats.

    Args:
        x: The scalar.
        tol: The float tolerance. Defaults to float_equal from info.json.

    Returns:
        Whether x is zero.

    """
    if is_exact(x):
        return x == 0
    return abs(x) <= (info.tolerances.float_equal if tol is None else tol)


def close(a: SCALAR_TYPE, b: SCALAR_TYPE, tol: Optional[float] = None, relative: bool = False) -> bool:
    """
    Equality test for scalars, exact when both are fractions.

    With relative=True the float tolerance is scaled by max(1, |a|, |b|).
    """
    if is_exact(a) and is_exact(b):
        return a == b
    tol = info.tolerances.float_equal if tol is None else tol
    scale = max(1.0, abs(float(a)), abs(float(b))) if relative else 1.0
    return abs(float(a) - float(b)) <= tol * scale


def residual(a: SCALAR_TYPE, b: SCALAR_TYPE = 0) -> float:
    """
    Absolute difference as a float, used in reports.
    """
    return abs(float(a - b))


def format_scalar(x: SCALAR_TYPE) -> str:
    """
    Formats a scalar for JSON and CSV output.

    Examples:
        Fraction(3, 4) -> '3/4'
        Fraction(2) -> '2/1'
        0.5 -> '0.5'
        2.0 -> '2.0'

    Args:
        x: The scalar.

    Returns:
        'p/q' for fractions, 17 significant digits for floats (always with a decimal point or exponent).

    """
    if is_exact(x):
        x = Fraction(x)
        return f'{x.numerator}/{x.denominator}'
    text = f'{float(x):.17g}'
    if not any(ch in text for ch in '.eEn'):
        text += '.0'
    return text


def parse_scalar(data, backend: Optional[str] = None) -> SCALAR_TYPE:
    """
    Parses a scalar from JSON or command line input.

    Strings containing '/' and bare integers become fractions, other decimal strings become floats. A backend forces
    the type: 'rational' parses decimals exactly, 'float' converts fractions.

    Args:
        data: String, int or float.
        backend: None, 'rational' or 'float'.

    Returns:
        The scalar.

    """
    if backend not in (None,) + BACKENDS:
        raise ValueError(f'Unknown scalar backend \'{backend}\'.')
    if isinstance(data, float):
        value = data
    elif isinstance(data, int):
        value = Fraction(data)
    else:
        text = str(data).strip()
        exact = backend == 'rational' or '/' in text or text.lstrip('+-').isdigit()
        try:
            value = Fraction(text) if exact else float(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f'Cannot parse scalar \'{data}\'.') from exc
    if backend == 'rational':
        return Fraction(value)
    if backend == 'float':
        return float(value)
    return value


def to_backend(x, backend: str) -> SCALAR_TYPE:
    return Fraction(x) if backend == 'rational' else float(x)


def sqrt(x: SCALAR_TYPE) -> SCALAR_TYPE:
    """
    Square root that stays exact when x is the square of a fraction.

    Args:
        x: A nonnegative scalar.

    Returns:
        A fraction when x is a rational square, otherwise a float.

    """
    if is_exact(x):
        x = Fraction(x)
        if x >= 0:
            num, den = isqrt(x.numerator), isqrt(x.denominator)
            if num * num == x.numerator and den * den == x.denominator:
                return Fraction(num, den)
    return float(np.sqrt(float(x)))


# ======================== BRACKETS AND COORDINATES ====================================================================
def bracket(a: Vec2, b: Vec2) -> SCALAR_TYPE:
    """
    The centroaffine bracket, the determinant of the 2x2 matrix with columns a and b.

    Examples:
        bracket((1, 0), (0, 1)) -> 1
        bracket((1, 0), (-1, -1)) -> -1

    Args:
        a: First vector.
        b: Second vector.

    Returns:
        a.x * b.y - b.x * a.y

    """
    return a.x * b.y - b.x * a.y


def sv_coords(p: PolygonData) -> SVCoords:
    """
    Computes the moduli coordinates s[i] = [P_i, P_{i+1}] and v[i] = [P_{i-1}, P_{i+1}].

    For twisted polygons the wrap-around vertices come from the monodromy.

    Args:
        p: The polygon.

    Returns:
        The SVCoords.

    Raises:
        DegeneratePolygonError: Some s[i] or v[i] vanishes.

    """
    n = p.n
    points = [p.vertex(i) for i in range(-1, n + 1)]
    s = [bracket(points[i + 1], points[i + 2]) for i in range(n)]
    v = [bracket(points[i], points[i + 2]) for i in range(n)]
    for i in range(n):
        if is_zero(s[i]):
            raise DegeneratePolygonError('Side bracket vanishes.', i)
        if is_zero(v[i]):
            raise DegeneratePolygonError('Short diagonal bracket vanishes.', i)
    return SVCoords(s, v)


def recursion_vertices(sv: SVCoords, frame: tuple[Vec2, Vec2], count: int) -> list[Vec2]:
    """
    Runs the vertex recursion P_{i+1} = (v[i] / s[i-1]) P_i - (s[i] / s[i-1]) P_{i-1} from P_0, P_1.

    Args:
        sv: The coordinates.
        frame: (P_0, P_1).
        count: Number of vertices to produce, at least 2.

    Returns:
        The vertices P_0, ..., P_{count-1}.

    """
    points = [frame[0], frame[1]]
    i = 1
    while len(points) < count:
        points.append(points[i] * (sv.diagonal(i) / sv.side(i - 1)) - points[i - 1] * (sv.side(i) / sv.side(i - 1)))
        i += 1
    return points[:count]


def planar_monodromy(points: Sequence[Vec2]) -> Mat2:
    """
    The matrix M with M P_0 = P_n and M P_1 = P_{n+1}, computed as [P_n | P_{n+1}] [P_0 | P_1]^{-1}.

    Args:
        points: P_0, ..., P_{n+1}.

    Returns:
        The monodromy.

    """
    n = len(points) - 2
    return Mat2.from_columns(points[n], points[n + 1]) @ Mat2.from_columns(points[0], points[1]).inverse()


def reconstruct(sv: SVCoords, frame: tuple[Vec2, Vec2]) -> PolygonData:
    """
    Rebuilds a polygon from its moduli coordinates and the first two vertices.

    The result is marked closed when the monodromy is the identity, exactly for fractions and within float_equal for
    floats; closed results carry the exact identity as monodromy. The planar monodromy stored on the polygon is
    conjugate to monodromy(sv).

    Args:
        sv: The coordinates, all entries nonzero.
        frame: (P_0, P_1) with [P_0, P_1] = s[0].

    Returns:
        The polygon.

    Raises:
        FrameMismatchError: [P_0, P_1] differs from s[0].
        DegeneratePolygonError: Some coordinate vanishes.

    """
    for i in range(sv.n):
        if is_zero(sv.s[i]) or is_zero(sv.v[i]):
            raise DegeneratePolygonError('Coordinates must be nonzero.', i)
    if not close(bracket(*frame), sv.s[0], relative=True):
        raise FrameMismatchError(f'Frame bracket {bracket(*frame)} differs from s[0] = {sv.s[0]}.')
    points = recursion_vertices(sv, frame, sv.n + 2)
    mono = planar_monodromy(points)
    if mono.is_identity():
        return PolygonData(points[:sv.n], True, Mat2.identity(mono.a if is_exact(mono.a) else 1.0))
    return PolygonData(points[:sv.n], False, mono)


def standard_frame(sv: SVCoords) -> tuple[Vec2, Vec2]:
    """
    The frame ((1, 0), (0, s[0])).
    """
    one = sv.s[0] ** 0
    return Vec2(one, 0 * one), Vec2(0 * one, sv.s[0])


def act(m: Mat2, p: PolygonData) -> PolygonData:
    """
    Image of a polygon under a linear map; the monodromy is conjugated accordingly.
    """
    monodromy = p.monodromy if p.closed else m @ p.monodromy @ m.inverse()
    return PolygonData([m @ q for q in p.vertices], p.closed, monodromy)


def sv_equal_up_to_shift(a: SVCoords, b: SVCoords, tol: Optional[float] = None) -> bool:
    """
    Whether two coordinate sets agree after some cyclic relabeling of b.
    """
    if a.n != b.n:
        return False
    for k in range(a.n):
        if all(close(a.s[i], b.side(i + k), tol) and close(a.v[i], b.diagonal(i + k), tol) for i in range(a.n)):
            return True
    return False


# ======================== MONODROMY AND CONTINUANTS ===================================================================
def recursion_coefficients(sv: SVCoords) -> tuple[list[SCALAR_TYPE], list[SCALAR_TYPE]]:
    """
    The coefficients a_j = v[j] / s[j-1] and b_j = s[j] / s[j-1] of the vertex recursion.
    """
    a = [sv.v[j] / sv.side(j - 1) for j in range(sv.n)]
    b = [sv.s[j] / sv.side(j - 1) for j in range(sv.n)]
    return a, b


def monodromy(sv: SVCoords) -> Mat2:
    """
    The monodromy A_{n-1} ... A_0 with A_j = [[0, 1], [-s[j] / s[j-1], v[j] / s[j-1]]].

    Examples:
        s=(1, 1, 1), v=(-1, -1, -1) -> identity
        s=(1, 1, 1), v=(1, 1, 1) -> minus identity

    Args:
        sv: The coordinates.

    Returns:
        The monodromy matrix, of determinant 1.

    """
    a, b = recursion_coefficients(sv)
    result = Mat2.identity(a[0] if is_exact(a[0]) else 1.0)
    for j in range(sv.n):
        result = Mat2(0 * a[j], a[j] ** 0, -b[j], a[j]) @ result
    return result


def continuant(a: Sequence[SCALAR_TYPE], b: Sequence[SCALAR_TYPE], i: int, j: int) -> SCALAR_TYPE:
    """
    The continuant D_{i,j}, indices of a and b taken cyclically.

    Examples:
        a=(-1, -1, -1), b=(1, 1, 1): D_{0,2} -> 0, D_{0,3} -> 1

    Args:
        a: Diagonal entries.
        b: Off-diagonal products.
        i: First index.
        j: Second index, at least i - 1.

    Returns:
        D_{i,j}.

    Raises:
        IndexOrderError: i > j + 1.

    """
    if i > j + 1:
        raise IndexOrderError(f'Continuant D_{{{i},{j}}} needs i <= j + 1.')
    one = a[0] ** 0
    previous, current = 0 * one, one
    if j == i - 1:
        return previous
    n = len(a)
    for k in range(i, j):
        previous, current = current, a[k % n] * current - b[k % n] * previous
    return current


def continuant_monodromy(a: Sequence[SCALAR_TYPE], b: Sequence[SCALAR_TYPE]) -> Mat2:
    """
    The matrix [[-b_0 D_{1,n-1}, D_{0,n-1}], [-b_0 D_{1,n}, D_{0,n}]] for sequences of length n >= 1.
    """
    n = len(a)
    return Mat2(-b[0] * continuant(a, b, 1, n - 1), continuant(a, b, 0, n - 1),
                -b[0] * continuant(a, b, 1, n), continuant(a, b, 0, n))


def monodromy_via_continuants(sv: SVCoords) -> Mat2:
    """
    The monodromy written with continuants of a_j = v[j] / s[j-1], b_j = s[j] / s[j-1].

    Equal to monodromy(sv).
    """
    return continuant_monodromy(*recursion_coefficients(sv))


def tridiagonal_matrix(a: Sequence[SCALAR_TYPE], b: Sequence[SCALAR_TYPE], i: int, j: int) -> list[list]:
    """
    The explicit tridiagonal matrix whose determinant is D_{i,j}.
    """
    size = j - i
    n = len(a)
    zero = 0 * a[0]
    rows = [[zero] * size for _ in range(size)]
    for k in range(size):
        rows[k][k] = a[(i + k) % n]
        if k + 1 < size:
            rows[k][k + 1] = b[(i + k + 1) % n]
            rows[k + 1][k] = zero + 1
    return rows


def exact_determinant(rows: list[list]) -> SCALAR_TYPE:
    """
    Determinant by fraction-preserving Gaussian elimination.
    """
    size = len(rows)
    if size == 0:
        return Fraction(1)
    m = [list(row) for row in rows]
    det = m[0][0] ** 0
    for col in range(size):
        pivot = next((r for r in range(col, size) if not is_zero(m[r][col], 0.0)), None)
        if pivot is None:
            return 0 * det
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] / m[col][col]
            for k in range(col, size):
                m[r][k] = m[r][k] - factor * m[col][k]
    return det


def solve_linear(rows: list[list], rhs: Sequence[SCALAR_TYPE]) -> list[SCALAR_TYPE]:
    """
    Solves rows @ x = rhs. Exact systems go through Cramer's rule over exact_determinant, float systems through
    numpy.linalg.solve.

    Raises:
        SingularSystemError: The determinant is zero, up to float_equal for floats.

    """
    if all(is_exact(x) for row in rows for x in row) and all(is_exact(x) for x in rhs):
        rows = [[Fraction(x) for x in row] for row in rows]
        rhs = [Fraction(x) for x in rhs]
        det = exact_determinant(rows)
        if det == 0:
            raise SingularSystemError('The linear system is singular.')
        size = len(rows)
        return [exact_determinant([[rhs[r] if j == column else rows[r][j] for j in range(size)]
                                   for r in range(size)]) / det for column in range(size)]
    matrix = np.array(rows, dtype=float)
    if is_zero(float(np.linalg.det(matrix))):
        raise SingularSystemError('The linear system is singular.')
    return [float(x) for x in np.linalg.solve(matrix, np.array(rhs, dtype=float))]


def closure_defect(sv: SVCoords) -> list[SCALAR_TYPE]:
    """
    The n continuants D_{i,n+i-1}.

    They all vanish when the monodromy is plus or minus the identity; use is_closed to tell the two apart.

    Args:
        sv: The coordinates.

    Returns:
        The defects.

    """
    a, b = recursion_coefficients(sv)
    return [continuant(a, b, i, sv.n + i - 1) for i in range(sv.n)]


def closure_sign_defect(sv: SVCoords) -> list[SCALAR_TYPE]:
    """
    The n values D_{i,n+i} - 1, zero for identity monodromy and -2 for minus the identity.
    """
    a, b = recursion_coefficients(sv)
    return [continuant(a, b, i, sv.n + i) - 1 for i in range(sv.n)]


def is_closed(sv: SVCoords, tol: Optional[float] = None) -> bool:
    """
    Whether the coordinates describe a closed polygon, that is monodromy(sv) is the identity.
    """
    return monodromy(sv).is_identity(tol)


def ptolemy_defect(sv: SVCoords) -> list[SCALAR_TYPE]:
    """
    Residuals of the Ptolemy-Plucker relations of closed quadrilaterals and pentagons.

    For n = 4 the residuals are v[1]v[2] - (s[0]s[2] - s[1]s[3]), v[0] + v[2] and v[1] + v[3]. For n = 5 they are
    v[i]v[i+1] - s[i-1]s[i+1] + s[i]v[i-2] for i = 0..4.

    Args:
        sv: The coordinates.

    Returns:
        The residuals.

    Raises:
        WrongArityError: n is neither 4 nor 5.

    """
    s, v = sv.side, sv.diagonal
    if sv.n == 4:
        return [v(1) * v(2) - (s(0) * s(2) - s(1) * s(3)), v(0) + v(2), v(1) + v(3)]
    if sv.n == 5:
        return [v(i) * v(i + 1) - s(i - 1) * s(i + 1) + s(i) * v(i - 2) for i in range(5)]
    raise WrongArityError(f'Ptolemy relations are defined for n = 4 and n = 5, not n = {sv.n}.')


def is_regular_value(s: Sequence[SCALAR_TYPE]) -> bool:
    """
    Whether s is a regular value of the side-bracket map on closed polygons.

    Odd n: all entries nonzero. Even n: additionally the products over even and odd positions differ up to sign.

    Examples:
        (1, 1, 1) -> True
        (1, 1, 1, 1) -> False
        (2, 1, 1, 1) -> True

    Args:
        s: The side brackets, length at least 3.

    Returns:
        Whether s is regular.

    """
    if len(s) < 3:
        raise WrongArityError('Need at least 3 side brackets.')
    if any(is_zero(x) for x in s):
        return False
    if len(s) % 2 == 1:
        return True
    even, odd = prod(s[0::2]), prod(s[1::2])
    return not (close(even, odd) or close(even, -odd))


def side_jacobian(p: PolygonData) -> np.ndarray:
    """
    Jacobian of the map P -> ([P_i, P_{i+1}])_i at a closed polygon, as an n x 2n float array.

    Columns are ordered x_0, y_0, x_1, y_1, ...
    """
    n = p.n
    jac = np.zeros((n, 2 * n))
    for i in range(n):
        here, after = p.vertices[i], p.vertices[(i + 1) % n]
        k = (i + 1) % n
        jac[i, 2 * i] += float(after.y)
        jac[i, 2 * i + 1] -= float(after.x)
        jac[i, 2 * k] -= float(here.y)
        jac[i, 2 * k + 1] += float(here.x)
    return jac


def side_map_rank(p: PolygonData) -> int:
    return int(np.linalg.matrix_rank(side_jacobian(p), tol=1e-8))


def vertices_close(a: PolygonData, b: PolygonData, tol: Optional[float] = None) -> bool:
    """
    Vertexwise equality of two polygons with the same n.
    """
    return a.n == b.n and all(close(p.x, q.x, tol) and close(p.y, q.y, tol) for p, q in zip(a.vertices, b.vertices))


def as_points(data: Iterable) -> list[Vec2]:
    """
    Converts an iterable of pairs to Vec2 objects.
    """
    return [p if isinstance(p, Vec2) else Vec2(*p) for p in data]
