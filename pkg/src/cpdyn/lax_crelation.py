"""
The c-relation module: centroaffine reflections, the Lax construction and the polygons c-related to a given one.

Two polygons P and Q are c-related when [P_i, Q_i] = c and [P_i, P_{i+1}] = [Q_i, Q_{i+1}] for all i. Given P and
Q_0, the second condition determines Q_{i+1} from Q_i by a centroaffine reflection (c_step). Parameterising Q_i on the
line {c P_{i+1} / s[i] + t P_i} turns each step into a Mobius map of t; their product is the Lax map, and partners
of P correspond to its fixed points.

General Documentation:
    Partners are returned sorted by their fixed point t. Iterating the correspondence keeps the branch that is not the
    central reflection of the previous polygon; the first step takes the larger t.

    Fixed points are exact fractions when the discriminant of the fixed-point quadratic is a rational square, and
    floats otherwise.
"""

import enum
import logging

from typing import Optional, Sequence

from .config import info
from .core_polygon import (SCALAR_TYPE, Mat2, PolygonData, SVCoords, Vec2, bracket, close, is_exact, is_zero,
                           residual, sqrt, sv_coords, vertices_close)
from .errors import (BranchLostError, CollinearPairError, CpdynError, NoRealPartnerError, NotClosedChainError,
                     NotRelatedError, SingularCompletionError, WrongArityError, ZeroCError)

logger = logging.getLogger(__name__)


# ======================== CLASSES =====================================================================================
class MoebiusMap:
    """
    Class representing the fractional-linear map t -> (a t + b) / (c t + d) of a 2x2 matrix.
    """

    def __init__(self, m: Mat2) -> None:
        self.m = m

    def __str__(self) -> str:
        return f'MoebiusMap {self.m}'

    def __matmul__(self, other: 'MoebiusMap') -> 'MoebiusMap':
        return MoebiusMap(self.m @ other.m)

    def __call__(self, t: SCALAR_TYPE) -> SCALAR_TYPE:
        return (self.m.a * t + self.m.b) / (self.m.c * t + self.m.d)

    def det(self) -> SCALAR_TYPE:
        return self.m.det()

    def trace(self) -> SCALAR_TYPE:
        return self.m.trace()

    def is_scalar(self, tol: Optional[float] = None) -> bool:
        """
        Whether the matrix is proportional to the identity, so that the map fixes every t.

        The float test compares off-diagonal entries and the diagonal difference against the diagonal scale.
        """
        a, b, c, d = self.m.entries()
        if all(is_exact(x) for x in (a, b, c, d)):
            return b == 0 and c == 0 and a == d and a != 0
        tol = info.tolerances.all_related if tol is None else tol
        scale = max(abs(a), abs(d))
        if scale == 0:
            return False
        return max(abs(b), abs(c), abs(a - d)) <= tol * scale


class CRelatedPair:
    """
    Class storing a polygon p, a c-related polygon q, the constant c and the fixed point t that produced q.
    """

    def __init__(self, p: PolygonData, q: PolygonData, c: SCALAR_TYPE, t_root: SCALAR_TYPE) -> None:
        self.p = p
        self.q = q
        self.c = c
        self.t_root = t_root

    def __str__(self) -> str:
        return f'CRelatedPair with c={self.c}, t={self.t_root}'

    def residual(self) -> float:
        return relation_residual(self.p, self.q, self.c)


class AllRelated:
    """
    Result of solve_c_related when the Lax map is the identity: every point of the line gives a partner.
    """

    def __init__(self, p: PolygonData, c: SCALAR_TYPE) -> None:
        self.p = p
        self.c = c

    def __str__(self) -> str:
        return f'AllRelated family for c={self.c}'

    def __bool__(self) -> bool:
        return True

    def partner(self, t: SCALAR_TYPE) -> CRelatedPair:
        """
        The member of the family with Q_0 = c P_1 / s[0] + t P_0.
        """
        return CRelatedPair(self.p, propagate(self.p, self.c, t), self.c, t)


class ButterflyClass(enum.Enum):
    BUTTERFLY = 'Butterfly'
    ANTI_BUTTERFLY = 'AntiButterfly'
    OPPOSITE_SYMMETRIC = 'OppositeSymmetric'
    GENERIC = 'Generic'


# ======================== REFLECTIONS AND STEPS =======================================================================
def reflect(q: Vec2, p: Vec2, x: Vec2) -> Vec2:
    """
    The centroaffine reflection interchanging q and p, applied to x.

    Examples:
        reflect((1, 2), (2, 1), (1, 0)) -> (0, 1)

    Args:
        q: First vector.
        p: Second vector.
        x: The vector to reflect.

    Returns:
        ([q, x] q + [x, p] p) / [q, p]

    Raises:
        CollinearPairError: [q, p] = 0.

    """
    den = bracket(q, p)
    if is_zero(den):
        raise CollinearPairError(f'Cannot reflect in the collinear pair {q}, {p}.')
    return (q * bracket(q, x) + p * bracket(x, p)) / den


def reflection_matrix(q: Vec2, p: Vec2) -> Mat2:
    """
    Matrix of the reflection interchanging q and p.
    """
    den = bracket(q, p)
    if is_zero(den):
        raise CollinearPairError(f'Cannot reflect in the collinear pair {q}, {p}.')
    first = (q * (-q.y) + p * p.y) / den
    second = (q * q.x - p * p.x) / den
    return Mat2.from_columns(first, second)


def c_step(q_i: Vec2, p_i: Vec2, p_next: Vec2, c: SCALAR_TYPE) -> Vec2:
    """
    The next vertex of a c-related polygon.

    Examples:
        c_step((1, 2), (1, 0), (2, 1), 2) -> (0, 1)

    Args:
        q_i: Current vertex of Q, with [p_i, q_i] = c.
        p_i: Current vertex of P.
        p_next: Next vertex of P.
        c: The constant.

    Returns:
        q_next with [p_next, q_next] = c and [q_i, q_next] = [p_i, p_next].

    Raises:
        CollinearPairError: q_i is parallel to p_next.

    """
    den = bracket(q_i, p_next)
    if is_zero(den):
        raise CollinearPairError(f'Vertex {q_i} is parallel to {p_next}.')
    return (q_i * (-c) + p_next * bracket(p_i, p_next)) / den


def step_matrix(sv: SVCoords, i: int, c: SCALAR_TYPE) -> MoebiusMap:
    """
    The Mobius map of one c-step on the line parameter t of {c P_{i+1} / s[i] + t P_i}.

    Args:
        sv: The coordinates.
        i: The step index.
        c: The constant (the spectral parameter).

    Returns:
        [[-c v[i+1] / (s[i] s[i+1]), 1 - c^2 / s[i]^2], [1, 0]], of determinant c^2 / s[i]^2 - 1.

    """
    s, s_next, v_next = sv.side(i), sv.side(i + 1), sv.diagonal(i + 1)
    one = s ** 0
    return MoebiusMap(Mat2(-c * v_next / (s * s_next), one - c * c / (s * s), one, 0 * one))


def lax_matrix(sv: SVCoords, lam: SCALAR_TYPE) -> MoebiusMap:
    """
    The Lax map, product of the step matrices for i = 0..n-1 with later steps on the left.

    Its determinant is the product of lambda^2 / s[i]^2 - 1.
    """
    result = step_matrix(sv, 0, lam)
    for i in range(1, sv.n):
        result = step_matrix(sv, i, lam) @ result
    return result


def embed(p: PolygonData, c: SCALAR_TYPE, t: SCALAR_TYPE) -> Vec2:
    """
    The point c P_1 / s[0] + t P_0 of the line of admissible Q_0.
    """
    s0 = bracket(p.vertex(0), p.vertex(1))
    return p.vertex(1) * (c / s0) + p.vertex(0) * t


def line_parameter(p: PolygonData, q0: Vec2) -> SCALAR_TYPE:
    """
    The t with embed(p, c, t) = q0, for q0 on the line.
    """
    return bracket(q0, p.vertex(1)) / bracket(p.vertex(0), p.vertex(1))


def propagate(p: PolygonData, c: SCALAR_TYPE, t: SCALAR_TYPE) -> PolygonData:
    """
    The polygon Q obtained from Q_0 = embed(p, c, t) by repeated c-steps; same closure flag and monodromy as p.
    """
    points = [embed(p, c, t)]
    for i in range(p.n - 1):
        points.append(c_step(points[i], p.vertex(i), p.vertex(i + 1), c))
    return PolygonData(points, p.closed, p.monodromy)


def relation_residual(p: PolygonData, q: PolygonData, c: SCALAR_TYPE) -> float:
    """
    Largest violation of [P_i, Q_i] = c and [P_i, P_{i+1}] = [Q_i, Q_{i+1}], wrapping through the monodromies.
    """
    worst = 0.0
    for i in range(p.n):
        worst = max(worst, residual(bracket(p.vertex(i), q.vertex(i)), c),
                    residual(bracket(p.vertex(i), p.vertex(i + 1)), bracket(q.vertex(i), q.vertex(i + 1))))
    return worst


def is_c_related(p: PolygonData, q: PolygonData, c: SCALAR_TYPE, tol: Optional[float] = None) -> bool:
    """
    Whether q is c-related to p: exact for fractions, within tol (relative to the bracket scale) for floats.
    """
    if p.n != q.n or not p.monodromy.is_close(q.monodromy, tol):
        return False
    exact = all(is_exact(x) for pt in p.vertices + q.vertices for x in pt) and is_exact(c)
    if exact:
        return relation_residual(p, q, c) == 0
    tol = info.tolerances.float_equal if tol is None else tol
    scale = max([1.0, abs(float(c))] + [abs(float(bracket(p.vertex(i), p.vertex(i + 1)))) for i in range(p.n)])
    return relation_residual(p, q, c) <= tol * scale


# ======================== SOLVING AND ITERATING =======================================================================
def fixed_point_roots(m: Mat2) -> list[SCALAR_TYPE]:
    """
    Real solutions of gamma t^2 + (delta - alpha) t - beta = 0 for m = [[alpha, beta], [gamma, delta]], ascending.

    A vanishing gamma leaves the linear equation. A double root is returned once.
    """
    alpha, beta, gamma, delta = m.entries()
    if is_zero(gamma, 0.0):
        if is_zero(delta - alpha, 0.0):
            return []
        return [beta / (delta - alpha)]
    disc = (delta - alpha) ** 2 + 4 * beta * gamma
    scale = (delta - alpha) ** 2 + abs(4 * beta * gamma)
    if is_exact(disc):
        if disc < 0:
            return []
        if disc == 0:
            return [(alpha - delta) / (2 * gamma)]
    else:
        if disc < -info.tolerances.float_equal * scale:
            return []
        if disc <= info.tolerances.float_equal * scale:
            return [(alpha - delta) / (2 * gamma)]
    root = sqrt(disc)
    return sorted([(alpha - delta - root) / (2 * gamma), (alpha - delta + root) / (2 * gamma)])


def lax_discriminant(sv: SVCoords, c: SCALAR_TYPE) -> SCALAR_TYPE:
    """
    tr^2 - 4 det of the Lax map at lambda = c; real partners exist exactly when it is nonnegative.
    """
    lax = lax_matrix(sv, c)
    return lax.trace() ** 2 - 4 * lax.det()


def solve_c_related(p: PolygonData, c: SCALAR_TYPE) -> list[CRelatedPair] | AllRelated:
    """
    Finds the polygons c-related to p.

    Fixed points of the Lax map at lambda = c are embedded as Q_0 and propagated with c_step. A root whose propagation
    meets a collinear pair (the pole of a singular Lax map) or fails the relation check is discarded.

    Args:
        p: The polygon.
        c: The nonzero constant.

    Returns:
        Zero, one or two CRelatedPair objects sorted by t, or AllRelated when the Lax map is the identity.

    Raises:
        ZeroCError: c = 0.

    """
    if is_zero(c, 0.0):
        raise ZeroCError('The c-relation needs c != 0.')
    sv = sv_coords(p)
    lax = lax_matrix(sv, c)
    if lax.is_scalar():
        return AllRelated(p, c)
    pairs = []
    for t in fixed_point_roots(lax.m):
        try:
            q = propagate(p, c, t)
            closing = c_step(q.vertex(p.n - 1), p.vertex(p.n - 1), p.vertex(p.n), c)
        except CollinearPairError:
            logger.debug('discarded fixed point t=%s at a collinear step', t)
            continue
        target = q.vertex(p.n)
        if not (close(closing.x, target.x, info.tolerances.branch, True) and
                close(closing.y, target.y, info.tolerances.branch, True)):
            logger.debug('discarded fixed point t=%s failing to close', t)
            continue
        pairs.append(CRelatedPair(p, q, c, t))
    return pairs


def partner_near(p: PolygonData, c: SCALAR_TYPE, q_ref: PolygonData) -> PolygonData:
    """
    The partner of p closest to q_ref, used to follow one branch of the correspondence continuously.

    Raises:
        NoRealPartnerError: p has no real partner.

    """
    solutions = solve_c_related(p, c)
    if isinstance(solutions, AllRelated):
        return solutions.partner(line_parameter(p, q_ref.vertex(0))).q
    if not solutions:
        raise NoRealPartnerError(f'No real partner for c={c}.')
    return min((pair.q for pair in solutions), key=lambda q: _distance(q, q_ref))


def _distance(a: PolygonData, b: PolygonData) -> float:
    return max((p - q).norm() for p, q in zip(a.vertices, b.vertices))


def iterate_c_dynamics(p: PolygonData, c: SCALAR_TYPE, steps: int) -> list[PolygonData]:
    """
    Iterates the c-relation as a map, discarding at each step the partner equal to minus the previous polygon.

    Args:
        p: The starting polygon.
        c: The constant.
        steps: Number of steps.

    Returns:
        The orbit, starting with p, of length steps + 1.

    Raises:
        NoRealPartnerError: Some polygon of the orbit has no real partner.
        BranchLostError: Both partners coincide with minus the previous polygon, or the Lax map is the identity.

    """
    orbit = [p]
    for step in range(steps):
        current = orbit[-1]
        solutions = solve_c_related(current, c)
        if isinstance(solutions, AllRelated):
            raise BranchLostError('The Lax map is the identity; the branch is not determined.', step)
        if not solutions:
            raise NoRealPartnerError(f'No real partner at step {step} for c={c}.', step)
        if len(orbit) == 1:
            orbit.append(solutions[-1].q)
            continue
        excluded = orbit[-2].negated()
        candidates = [pair.q for pair in solutions if not vertices_close(pair.q, excluded, info.tolerances.branch)]
        if not candidates:
            raise BranchLostError('Every partner equals minus the previous polygon.', step)
        orbit.append(max(candidates, key=lambda q: _distance(q, excluded)))
        logger.debug('c-dynamics step %d done', step + 1)
    return orbit


# ======================== BUTTERFLIES =================================================================================
def classify_butterfly(quad: Sequence[Vec2], tol: Optional[float] = None) -> ButterflyClass:
    """
    Classifies a quadrilateral given in the test order (P1, P2, Q2, Q1).

    Examples:
        ((1, 0), (2, 1), (0, 1), (1, 2)) -> BUTTERFLY
        ((1, 0), (2, 1), (0, -1), (1, 2)) -> ANTI_BUTTERFLY

    Args:
        quad: The four vertices in cyclic order P1, P2, Q2, Q1.
        tol: Float tolerance, relative to the bracket scale.

    Returns:
        BUTTERFLY when [P1, P2] = [Q1, Q2] and [P1, Q1] = [P2, Q2]; ANTI_BUTTERFLY when both hold with a sign change;
        OPPOSITE_SYMMETRIC when an opposite pair sums to zero; GENERIC otherwise.

    """
    p1, p2, q2, q1 = quad
    a, b = bracket(p1, p2), bracket(q1, q2)
    e, f = bracket(p1, q1), bracket(p2, q2)
    if close(a, b, tol, True) and close(e, f, tol, True):
        return ButterflyClass.BUTTERFLY
    if close(a, -b, tol, True) and close(e, -f, tol, True):
        return ButterflyClass.ANTI_BUTTERFLY
    for u, w in ((p1, q2), (p2, q1)):
        if close(u.x + w.x, 0, tol) and close(u.y + w.y, 0, tol):
            return ButterflyClass.OPPOSITE_SYMMETRIC
    return ButterflyClass.GENERIC


# ======================== REFLECTION CHAINS ===========================================================================
def even_closure_condition(sv: SVCoords) -> SCALAR_TYPE:
    """
    The alternating sum of v[i] / (s[i-1] s[i]); for even n the composite reflection is the identity exactly when it
    vanishes.

    Raises:
        WrongArityError: n is odd.

    """
    if sv.n % 2:
        raise WrongArityError(f'The even closure condition needs even n, got {sv.n}.')
    return sum((-1) ** i * sv.v[i] / (sv.side(i - 1) * sv.s[i]) for i in range(sv.n))


def composite_reflection(a: PolygonData) -> Mat2:
    """
    R_{n-1} o ... o R_0, where R_i interchanges A_i and A_{i+1}.
    """
    result = reflection_matrix(a.vertex(0), a.vertex(1))
    for i in range(1, a.n):
        result = reflection_matrix(a.vertex(i), a.vertex(i + 1)) @ result
    return result


def reflection_chain(a: PolygonData, start: Vec2,
                     partner_start: Optional[Vec2] = None) -> tuple[PolygonData, PolygonData]:
    """
    Builds a c-related pair by chaining the reflections R_i that interchange consecutive vertices of a.

    For odd n the chain starting at P_0 = start runs twice around and visits every P_i and Q_i. For even n it closes
    after one turn, so a second chain starts at Q_0 = partner_start (the quarter turn of start by default).

    Args:
        a: A closed polygon.
        start: P_0.
        partner_start: Q_0, used for even n only.

    Returns:
        (P, Q), c-related with c = [P_0, Q_0].

    Raises:
        NotClosedChainError: a is twisted, or n is even and the even closure condition fails.

    """
    if not a.closed:
        raise NotClosedChainError('Reflection chains need a closed polygon.')
    sv = sv_coords(a)
    n = a.n
    reflections = [reflection_matrix(a.vertex(i), a.vertex(i + 1)) for i in range(n)]
    p_points: list[Optional[Vec2]] = [None] * n
    q_points: list[Optional[Vec2]] = [None] * n
    if n % 2:
        x = start
        for k in range(2 * n):
            (p_points if k % 2 == 0 else q_points)[k % n] = x
            x = reflections[k % n] @ x
        if not (close(x.x, start.x) and close(x.y, start.y)):
            raise NotClosedChainError('The odd reflection chain failed to close.')
    else:
        if not is_zero(even_closure_condition(sv)):
            raise NotClosedChainError('The composite reflection of an even polygon is not the identity.')
        if partner_start is None:
            partner_start = Vec2(-start.y, start.x)
        for first, second, seed in ((p_points, q_points, start), (q_points, p_points, partner_start)):
            x = seed
            for k in range(n):
                (first if k % 2 == 0 else second)[k] = x
                x = reflections[k] @ x
    p, q = PolygonData(p_points, True), PolygonData(q_points, True)
    c = bracket(p_points[0], q_points[0])
    if not is_c_related(p, q, c, info.tolerances.branch):
        raise NotRelatedError('Reflection chain output is not c-related.')
    return p, q


# ======================== BIANCHI PERMUTABILITY =======================================================================
def bianchi_complete(p: PolygonData, q: PolygonData, r: PolygonData, c: SCALAR_TYPE,
                     d: SCALAR_TYPE) -> PolygonData:
    """
    Completes P ~c Q and P ~d R to the fourth polygon S with Q ~d S and R ~c S.

    Each S_i solves [R_i, S_i] = c, [Q_i, S_i] = d, that is S_i = (c Q_i - d R_i) / [R_i, Q_i].

    Args:
        p: The common polygon.
        q: Its c-partner.
        r: Its d-partner.
        c: First constant.
        d: Second constant.

    Returns:
        S.

    Raises:
        NotRelatedError: An input relation or the output relations fail.
        SingularCompletionError: [R_i, Q_i] = 0 for some i.

    """
    if not is_c_related(p, q, c, info.tolerances.branch) or not is_c_related(p, r, d, info.tolerances.branch):
        raise NotRelatedError('Bianchi completion needs P ~c Q and P ~d R.')
    points = []
    for i in range(p.n):
        den = bracket(r.vertices[i], q.vertices[i])
        if is_zero(den):
            raise SingularCompletionError('The completion system is singular.', i)
        points.append((q.vertices[i] * c - r.vertices[i] * d) / den)
    s = PolygonData(points, p.closed, p.monodromy)
    if not (is_c_related(q, s, d, info.tolerances.branch) and is_c_related(r, s, c, info.tolerances.branch)):
        raise NotRelatedError('The completed polygon is not related to both partners.')
    return s


def real_partners(p: PolygonData, c: SCALAR_TYPE) -> list[PolygonData]:
    """
    The partner polygons of p as a plain list; empty for AllRelated and degenerate inputs.
    """
    try:
        solutions = solve_c_related(p, c)
    except CpdynError:
        return []
    if isinstance(solutions, AllRelated):
        return []
    return [pair.q for pair in solutions]
