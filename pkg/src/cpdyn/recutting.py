"""
Centroaffine polygon recutting.

The elementary recutting R_j replaces the vertex P_j by (s[j-1] P_{j-1} + s[j] P_{j+1}) / v[j]. It swaps the two side
brackets at P_j and is an involution. The full recutting is the composition of all n elementary ones, applied with
ascending index starting at vertex 1.

General Documentation:
    The elementary maps satisfy the relations R_j^2 = Id, (R_j R_{j+1})^3 = Id and R_j R_k = R_k R_j for cyclic
    distance at least 2. braid_check verifies all three families on a given polygon and reports degenerate
    intermediate diagonals instead of raising.

    Recutting commutes with the c-relation; recut_commutes_with_c measures the bracket residual of the recut pairs.
"""

import logging

from typing import Optional, Sequence

from .config import info
from .core_polygon import SCALAR_TYPE, PolygonData, Vec2, bracket, is_exact, is_zero, vertices_close
from .errors import CpdynError, DegenerateDiagonalError, NoRealPartnerError, NotTangentError
from .lax_crelation import AllRelated, relation_residual, solve_c_related

logger = logging.getLogger(__name__)


# ======================== CLASSES =====================================================================================
class RelationCheck:
    """
    Class storing the outcome of one checked relation.

    Attributes:
        name: The relation, such as 'R_1 R_2 braid'.
        passed: Whether it holds.
        worst: Largest vertex distance or bracket residual observed.
        witness: Description of the failure or degeneracy, None when passed.
    """

    def __init__(self, name: str, passed: bool, worst: float = 0.0, witness: Optional[str] = None) -> None:
        self.name = name
        self.passed = passed
        self.worst = worst
        self.witness = witness

    def __str__(self) -> str:
        status = 'pass' if self.passed else 'FAIL'
        return f'{self.name}: {status} (worst {self.worst:.3g})' + (f' [{self.witness}]' if self.witness else '')

    def to_json(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'worst': self.worst, 'witness': self.witness}


# ======================== RECUTTING ===================================================================================
def elementary_recut(p: PolygonData, j: int) -> PolygonData:
    """
    Replaces P_j by (s[j-1] P_{j-1} + s[j] P_{j+1}) / v[j].

    Examples:
        P = (1, 0), (0, 1), (-2, -1), j = 1 -> P'_1 = (3, 2)

    Args:
        p: The polygon; neighbours of P_0 and P_{n-1} wrap through the monodromy.
        j: The vertex, taken modulo n.

    Returns:
        The recut polygon, with the same monodromy.

    Raises:
        DegenerateDiagonalError: v[j] = 0.

    """
    j %= p.n
    before, here, after = p.vertex(j - 1), p.vertex(j), p.vertex(j + 1)
    diagonal = bracket(before, after)
    if is_zero(diagonal):
        raise DegenerateDiagonalError('Short diagonal vanishes during recutting.', j)
    return p.with_vertex(j, (before * bracket(before, here) + after * bracket(here, after)) / diagonal)


def recut_order(n: int, start: int = 1) -> list[int]:
    return [(start + k) % n for k in range(n)]


def recut(p: PolygonData, start: int = 1, order: Optional[Sequence[int]] = None) -> PolygonData:
    """
    The full recutting, R_{start+n-1} o ... o R_{start+1} o R_start (indices modulo n).

    Args:
        p: The polygon.
        start: First recut vertex.
        order: Explicit sequence of vertices, overriding start.

    Returns:
        The recut polygon.

    Raises:
        DegenerateDiagonalError: An intermediate short diagonal vanishes; its index is attached.

    """
    for j in (recut_order(p.n, start) if order is None else order):
        p = elementary_recut(p, j)
    return p


def recut_tangent(p: PolygonData, U: Sequence[Vec2], start: int = 1) -> tuple[PolygonData, list[Vec2]]:
    """
    Pushes a tangent vector of a closed polygon through the full recutting with the exact derivative of each
    elementary step.

    Args:
        p: A closed polygon.
        U: Per-vertex displacements.
        start: First recut vertex.

    Returns:
        The recut polygon and the pushed-forward displacements.

    Raises:
        NotTangentError: p is twisted or U has the wrong length.
        DegenerateDiagonalError: An intermediate short diagonal vanishes.

    """
    if not p.closed or len(U) != p.n:
        raise NotTangentError('Tangent pushforward needs a closed polygon and n displacements.')
    n = p.n
    U = list(U)
    for j in recut_order(n, start):
        before, here, after = p.vertex(j - 1), p.vertex(j), p.vertex(j + 1)
        u_before, u_here, u_after = U[(j - 1) % n], U[j], U[(j + 1) % n]
        s_before, s_here, diagonal = bracket(before, here), bracket(here, after), bracket(before, after)
        d_before = bracket(u_before, here) + bracket(before, u_here)
        d_here = bracket(u_here, after) + bracket(here, u_after)
        d_diagonal = bracket(u_before, after) + bracket(before, u_after)
        p = elementary_recut(p, j)
        moved = p.vertex(j)
        U[j] = (before * d_before + u_before * s_before + after * d_here + u_after * s_here - moved * d_diagonal) \
            / diagonal
    return p, U


# ======================== RELATION CHECKS =============================================================================
def _compare(name: str, a: PolygonData, b: PolygonData) -> RelationCheck:
    worst = max(float((x - y).norm()) for x, y in zip(a.vertices, b.vertices))
    return RelationCheck(name, vertices_close(a, b), worst)


def _apply(p: PolygonData, sequence: Sequence[int]) -> PolygonData:
    for j in sequence:
        p = elementary_recut(p, j)
    return p


def _checked(name: str, thunk) -> RelationCheck:
    try:
        return thunk()
    except DegenerateDiagonalError as err:
        return RelationCheck(name, False, float('inf'), f'degenerate diagonal at index {err.index}')


def braid_check(p: PolygonData) -> list[RelationCheck]:
    """
    Verifies the involution, braid and far-commutation relations of the elementary recuttings on p.

    Args:
        p: The polygon.

    Returns:
        One RelationCheck per relation instance: n involutions, n braids (R_j R_{j+1})^3 and one commutation for every
        pair at cyclic distance at least 2.

    """
    n = p.n
    checks = []
    for j in range(n):
        name = f'R_{j}^2'
        checks.append(_checked(name, lambda j=j, name=name: _compare(name, _apply(p, [j, j]), p)))
    for j in range(n):
        k = (j + 1) % n
        name = f'(R_{j} R_{k})^3'
        checks.append(_checked(name, lambda j=j, k=k, name=name: _compare(name, _apply(p, [k, j] * 3), p)))
    for j in range(n):
        for k in range(j + 2, n):
            if (j - k) % n < 2:
                continue
            name = f'R_{j} R_{k} = R_{k} R_{j}'
            checks.append(_checked(name, lambda j=j, k=k, name=name: _compare(name, _apply(p, [k, j]),
                                                                              _apply(p, [j, k]))))
    failed = [check.name for check in checks if not check.passed]
    if failed:
        logger.debug('braid relations failing: %s', failed)
    return checks


def _bracket_scale(*polygons: PolygonData) -> float:
    """
    Largest |X||Y| over adjacent, short-diagonal and paired vertices: a bound on every bracket the check evaluates.
    """
    scale = 1.0
    for a in polygons:
        for i in range(a.n):
            scale = max(scale, a.vertex(i).norm() * a.vertex(i + 1).norm(),
                        a.vertex(i - 1).norm() * a.vertex(i + 1).norm())
    for a, b in zip(polygons[0::2], polygons[1::2]):
        scale = max([scale] + [x.norm() * y.norm() for x, y in zip(a.vertices, b.vertices)])
    return scale


def recut_commutes_with_c(p: PolygonData, c: SCALAR_TYPE) -> list[RelationCheck]:
    """
    For every partner Q of p, checks R_j(P) ~c R_j(Q) for each j and recut(P) ~c recut(Q).

    Args:
        p: The polygon.
        c: The constant.

    Returns:
        The checks; worst is the bracket residual.

    Raises:
        NoRealPartnerError: p has no real c-partner.

    """
    solutions = solve_c_related(p, c)
    if isinstance(solutions, AllRelated):
        partners = []
        for t in (0, 1):
            try:
                partners.append(solutions.partner(t).q)
            except CpdynError:
                continue
    else:
        partners = [pair.q for pair in solutions]
    if not partners:
        raise NoRealPartnerError(f'No real partner for c={c}.')
    tol = info.tolerances.conservation
    checks = []
    for number, q in enumerate(partners):
        maps = [(f'R_{j}', lambda x, j=j: elementary_recut(x, j)) for j in range(p.n)] + [('recut', recut)]
        for label, f in maps:
            name = f'partner {number}: {label}'
            try:
                fp, fq = f(p), f(q)
            except DegenerateDiagonalError as err:
                checks.append(RelationCheck(name, False, float('inf'), f'degenerate diagonal at index {err.index}'))
                continue
            worst = relation_residual(fp, fq, c)
            if all(is_exact(x) for pt in p.vertices + q.vertices for x in pt) and is_exact(c):
                checks.append(RelationCheck(name, worst == 0, worst))
                continue
            scale = max(abs(float(c)), _bracket_scale(p, q, fp, fq))
            checks.append(RelationCheck(name, worst <= tol * scale, worst))
    return checks
