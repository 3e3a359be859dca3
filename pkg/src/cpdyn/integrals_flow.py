"""
Integrals of the c-relation and the infinitesimal flow on the moduli space.

The trace of the Lax map is a polynomial in the spectral parameter. Written in t = lambda^-2 it is a sum over
cyclically sparse index sets, and its coefficients F_0, F_1, ... are the integrals. The same polynomial comes out of
the continuant formula for the trace, which gives an independent cross-check.

For odd n the c-relation has an infinitesimal generator, a vector field on the v coordinates (s stays fixed). In the
variables g_i = v[i] / (s[i-1] s[i]) and beta_i = -1 / s[i-1]^2 it becomes a periodic dressing chain. The flow is
integrated with a fixed-step classical Runge-Kutta scheme.

General Documentation:
    F_k is the coefficient of t^k, equivalently of lambda^(n-2k) in lambda^n * sum_k F_k t^k. The continuant
    polynomial with a_i = lambda g_i equals the trace of the Lax map at -lambda, that is (-1)^n times the trace at
    lambda.

    On closed polygons F_0 = 2 / prod(s) and F_1 = -(1/2) sum(s^2) F_0. Both follow from
    tr(monodromy) = prod(s) F_0.
"""

import logging
import numpy as np

from math import prod
from itertools import combinations
from typing import Callable, Optional, Sequence

from .config import info
from .lax_crelation import lax_matrix
from .core_polygon import SCALAR_TYPE, SVCoords, format_scalar, is_zero, monodromy
from .errors import EvenArityError, SingularSpectralError, StepBlowupError, WrongArityError

DRESSING_TIME_SCALE = -1

A_RK4 = np.array([
    [0, 0, 0, 0],
    [0.5, 0, 0, 0],
    [0, 0.5, 0, 0],
    [0, 0, 1, 0]
])
B_RK4 = np.array([1 / 6, 1 / 3, 1 / 3, 1 / 6])

logger = logging.getLogger(__name__)


# ======================== CLASSES =====================================================================================
class SpectralPoly:
    """
    Class representing a polynomial in lambda by its dense ascending coefficients.
    """

    def __init__(self, coefficients: Sequence[SCALAR_TYPE]) -> None:
        self.coefficients = list(coefficients)

    def __str__(self) -> str:
        terms = [f'{c}*lambda^{k}' for k, c in enumerate(self.coefficients) if not is_zero(c, 0.0)]
        return ' + '.join(terms) if terms else '0'

    def __eq__(self, other) -> bool:
        return isinstance(other, SpectralPoly) and _trim(self.coefficients) == _trim(other.coefficients)

    @property
    def degree(self) -> int:
        return len(_trim(self.coefficients)) - 1

    def __call__(self, lam: SCALAR_TYPE) -> SCALAR_TYPE:
        result = 0 * lam
        for c in reversed(self.coefficients):
            result = result * lam + c
        return result

    def parity_ok(self, n: int) -> bool:
        """
        Whether only degrees n, n - 2, n - 4, ... carry nonzero coefficients.
        """
        return all(is_zero(c) for k, c in enumerate(self.coefficients) if (n - k) % 2)

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coefficients]


class IntegralVector:
    """
    Class storing the integrals F_0, ..., F_q of an n-gon, q = (n - 1) // 2.
    """

    def __init__(self, n: int, F: Sequence[SCALAR_TYPE]) -> None:
        self.n = n
        self.F = list(F)

    def __str__(self) -> str:
        return 'IntegralVector(' + ', '.join(f'F_{k}={f}' for k, f in enumerate(self.F)) + ')'

    def __len__(self) -> int:
        return len(self.F)

    def __getitem__(self, k: int) -> SCALAR_TYPE:
        return self.F[k]

    def to_json(self) -> dict:
        return {'n': self.n, 'F': [format_scalar(f) for f in self.F]}


class DressingState:
    """
    Class storing the dressing chain variables g_i = v[i] / (s[i-1] s[i]) and beta_i = -1 / s[i-1]^2.
    """

    def __init__(self, g: Sequence[SCALAR_TYPE], beta: Sequence[SCALAR_TYPE]) -> None:
        self.g = list(g)
        self.beta = list(beta)

    def __str__(self) -> str:
        return f'DressingState with g={self.g}'


# ======================== USEFUL FUNCTIONS (POLYNOMIALS) ==============================================================
def _trim(coefficients: Sequence[SCALAR_TYPE]) -> list[SCALAR_TYPE]:
    out = list(coefficients)
    while len(out) > 1 and is_zero(out[-1], 0.0):
        out.pop()
    return out


def _poly_mul(a: Sequence[SCALAR_TYPE], b: Sequence[SCALAR_TYPE]) -> list[SCALAR_TYPE]:
    out = [0 * a[0]] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _poly_add(a: Sequence[SCALAR_TYPE], b: Sequence[SCALAR_TYPE], sign: int = 1) -> list[SCALAR_TYPE]:
    size = max(len(a), len(b))
    zero = 0 * (a[0] if len(a) else b[0])
    a = list(a) + [zero] * (size - len(a))
    b = list(b) + [zero] * (size - len(b))
    return [x + sign * y for x, y in zip(a, b)]


# ======================== INTEGRALS ===================================================================================
def weights(sv: SVCoords) -> list[SCALAR_TYPE]:
    """
    g_i = v[i] / (s[i-1] s[i]).
    """
    return [sv.v[i] / (sv.side(i - 1) * sv.s[i]) for i in range(sv.n)]


def sparse_subsets(n: int) -> list[tuple[int, ...]]:
    """
    All cyclically sparse subsets of {0, ..., n-1}, the empty set included.

    Examples:
        sparse_subsets(3) -> [(), (0,), (1,), (2,)]

    Args:
        n: At least 3.

    Returns:
        The subsets ordered by size and then lexicographically; there are L_n of them (Lucas numbers).

    """
    if n < 3:
        raise WrongArityError(f'Sparse subsets need n >= 3, got {n}.')
    result = []
    for size in range(n // 2 + 1):
        for subset in combinations(range(n), size):
            if all((i + 1) % n not in subset for i in subset):
                result.append(subset)
    return result


def generating_polynomial(sv: SVCoords) -> list[SCALAR_TYPE]:
    """
    Coefficients in t of the sum over sparse I of prod_{j, j+1 not in I} g_j * prod_{i in I} (t - 1 / s[i-1]^2).
    """
    n = sv.n
    g = weights(sv)
    one = g[0] ** 0
    total = [0 * one]
    for subset in sparse_subsets(n):
        term = [prod((g[j] for j in range(n) if j not in subset and (j + 1) % n not in subset), start=one)]
        for i in subset:
            term = _poly_mul(term, [-one / sv.side(i - 1) ** 2, one])
        total = _poly_add(total, term)
    return total


def integrals_F(sv: SVCoords) -> IntegralVector:
    """
    The integrals F_k, k = 0..(n-1)//2, coefficients of the sparse-subset generating function.

    Examples:
        s=(1, 1, 1), v=(-1, -1, -1) -> F_0 = 2, F_1 = -3

    Args:
        sv: The coordinates.

    Returns:
        The IntegralVector.

    """
    coefficients = generating_polynomial(sv)
    count = (sv.n + 1) // 2
    coefficients += [0 * coefficients[0]] * (count - len(coefficients))
    return IntegralVector(sv.n, coefficients[:count])


def _continuant_poly(a: Sequence[list], b: Sequence[list], i: int, j: int) -> list[SCALAR_TYPE]:
    n = len(a)
    one = a[0][-1] ** 0
    previous, current = [0 * one], [one]
    for k in range(i, j):
        previous, current = current, _poly_add(_poly_mul(a[k % n], current), _poly_mul(b[k % n], previous), -1)
    return current


def lax_trace_poly(sv: SVCoords) -> SpectralPoly:
    """
    The trace polynomial D_{0,n} - b_0 D_{1,n-1} with a_i = lambda g_i and b_i = lambda^2 / s[i-1]^2 - 1.

    Its coefficient of lambda^(n-2k) is F_k. It equals the trace of the Lax map at -lambda.
    """
    n = sv.n
    g = weights(sv)
    zero = 0 * g[0]
    a = [[zero, x] for x in g]
    b = [[zero - 1, zero, 1 / sv.side(i - 1) ** 2] for i in range(n)]
    trace = _poly_add(_continuant_poly(a, b, 0, n), _poly_mul(b[0], _continuant_poly(a, b, 1, n - 1)), -1)
    coefficients = trace + [zero] * (n + 1 - len(trace))
    return SpectralPoly(coefficients[:n + 1])


def conjugacy_invariant(sv: SVCoords, lam: SCALAR_TYPE) -> SCALAR_TYPE:
    """
    (tr L)^2 / det L for the Lax map at lambda, invariant under the c-relation.

    Raises:
        SingularSpectralError: det L = 0, that is lambda^2 = s[i]^2 for some i.

    """
    lax = lax_matrix(sv, lam)
    det = lax.det()
    if is_zero(det):
        raise SingularSpectralError(f'The Lax map is singular at lambda={lam}.')
    return lax.trace() ** 2 / det


def closed_relations_defect(sv: SVCoords) -> tuple[SCALAR_TYPE, SCALAR_TYPE]:
    """
    Residuals of F_0 = 2 / prod(s) and F_1 = -(1/2) sum(s^2) F_0, which hold on closed polygons.
    """
    F = integrals_F(sv)
    product = prod(sv.s)
    return F[0] - 2 / product, F[1] + sum(x * x for x in sv.s) * F[0] / 2


def monodromy_trace_defect(sv: SVCoords) -> SCALAR_TYPE:
    """
    tr(monodromy) - prod(s) F_0, zero for every polygon.
    """
    return monodromy(sv).trace() - prod(sv.s) * integrals_F(sv)[0]


def gradient_F0_on_closed(sv: SVCoords, directions: int = 20, rng: Optional[np.random.Generator] = None,
                          step: Optional[float] = None) -> float:
    """
    Largest central-difference derivative of F_0 along random unit directions tangent to the closed polygons with the
    same s.

    The tangent space is the null space of the finite-difference Jacobian of the monodromy entries with respect to v.

    Args:
        sv: Coordinates of a closed polygon.
        directions: Number of random tangent directions.
        rng: The generator.
        step: Finite-difference step.

    Returns:
        The largest |dF_0| found.

    """
    from scipy.linalg import null_space

    rng = np.random.default_rng(info.defaults.seed) if rng is None else rng
    h = info.tolerances.finite_difference_step if step is None else step
    s = [float(x) for x in sv.s]
    v = np.array([float(x) for x in sv.v])

    def mono(values: np.ndarray) -> np.ndarray:
        return np.array(monodromy(SVCoords(s, list(values))).entries(), dtype=float)

    def f0(values: np.ndarray) -> float:
        return float(integrals_F(SVCoords(s, list(values)))[0])

    jac = np.column_stack([(mono(v + h * e) - mono(v - h * e)) / (2 * h) for e in np.eye(len(v))])
    basis = null_space(jac, rcond=1e-7)
    if basis.shape[1] == 0:
        return 0.0
    worst = 0.0
    for _ in range(directions):
        direction = basis @ rng.normal(size=basis.shape[1])
        direction /= np.linalg.norm(direction)
        worst = max(worst, abs(f0(v + h * direction) - f0(v - h * direction)) / (2 * h))
    return worst


# ======================== VECTOR FIELD AND DRESSING CHAIN =============================================================
def _require_odd(n: int) -> None:
    if n % 2 == 0:
        raise EvenArityError(f'The vector field is defined for odd n, got n={n}.')


def _alternating_tail(g: Sequence[SCALAR_TYPE], i: int) -> SCALAR_TYPE:
    n = len(g)
    return sum((-1) ** (k - 1) * g[(i + k) % n] for k in range(1, n))


def xi_field(sv: SVCoords) -> list[SCALAR_TYPE]:
    """
    The infinitesimal c-relation on the v coordinates.

    dv[i]/dt = v[i] * sum_{k=1}^{n-1} (-1)^(k-1) g_{i+k} + s[i] / s[i-1] - s[i-1] / s[i]

    Args:
        sv: The coordinates, n odd.

    Returns:
        The derivatives of v; s does not move.

    Raises:
        EvenArityError: n is even.

    """
    _require_odd(sv.n)
    g = weights(sv)
    return [sv.v[i] * _alternating_tail(g, i) + sv.s[i] / sv.side(i - 1) - sv.side(i - 1) / sv.s[i]
            for i in range(sv.n)]


def dressing_state(sv: SVCoords) -> DressingState:
    """
    The dressing chain variables of odd-gon coordinates.

    Raises:
        EvenArityError: n is even.

    """
    _require_odd(sv.n)
    return DressingState(weights(sv), [-1 / sv.side(i - 1) ** 2 for i in range(sv.n)])


def dressing_rhs(st: DressingState) -> list[SCALAR_TYPE]:
    """
    dg_i/dt = -g_i (g_{i+1} - g_{i+2} + ... - g_{i+n-1}) + beta_i - beta_{i+1}.
    """
    n = len(st.g)
    _require_odd(n)
    return [-st.g[i] * _alternating_tail(st.g, i) + st.beta[i] - st.beta[(i + 1) % n] for i in range(n)]


def xi_pushforward(sv: SVCoords) -> list[SCALAR_TYPE]:
    """
    The vector field xi written in the g variables: dg_i = dv[i] / (s[i-1] s[i]).
    """
    return [dv / (sv.side(i - 1) * sv.s[i]) for i, dv in enumerate(xi_field(sv))]


def fit_dressing_scale(samples: Sequence[SVCoords]) -> tuple[float, float]:
    """
    Least-squares constant k with xi_pushforward = k * dressing_rhs over all samples.

    Returns:
        (k, largest absolute residual).

    """
    lhs = np.concatenate([np.array(xi_pushforward(sv), dtype=float) for sv in samples])
    rhs = np.concatenate([np.array(dressing_rhs(dressing_state(sv)), dtype=float) for sv in samples])
    k = float(np.linalg.lstsq(rhs[:, None], lhs, rcond=None)[0][0])
    return k, float(np.max(np.abs(lhs - k * rhs)))


# ======================== FLOW ========================================================================================
def _rk4_step(f: Callable[[np.ndarray], np.ndarray], y: np.ndarray, dt: float) -> np.ndarray:
    stages = []
    for row in A_RK4:
        stages.append(f(y + dt * sum(a * k for a, k in zip(row, stages))))
    return y + dt * sum(b * k for b, k in zip(B_RK4, stages))


def _check_blowup(v: np.ndarray, time: float) -> None:
    if not np.all(np.isfinite(v)) or np.max(np.abs(v)) > info.defaults.blowup:
        raise StepBlowupError(f'The flow blew up at time {time:.6g}.')


def flow(sv: SVCoords, T: SCALAR_TYPE, dt: SCALAR_TYPE, callback: Optional[Callable] = None) -> SVCoords:
    """
    Integrates xi_field with the classical 4th-order Runge-Kutta method at fixed step.

    Args:
        sv: Starting coordinates, n odd.
        T: Final time; T = 0 returns sv itself.
        dt: Positive step. The last step is shortened to land on T.
        callback: Called as callback(time, coords) after every step.

    Returns:
        The coordinates at time T, as floats.

    Raises:
        EvenArityError: n is even.
        StepBlowupError: Some |v[i]| exceeds the blowup bound or the state stops being finite.

    """
    _require_odd(sv.n)
    if dt <= 0:
        raise ValueError('The flow step must be positive.')
    if T == 0:
        return sv
    s = [float(x) for x in sv.s]
    if any(is_zero(x, np.finfo(float).tiny) for x in s):
        raise StepBlowupError('Side brackets underflow.')

    def field(values: np.ndarray) -> np.ndarray:
        return np.array(xi_field(SVCoords(s, list(values))), dtype=float)

    v = np.array([float(x) for x in sv.v])
    time, T, dt = 0.0, float(T), float(dt)
    steps = 0
    while time < T - 1e-12 * max(1.0, T):
        h = min(dt, T - time)
        v = _rk4_step(field, v, h)
        time += h
        steps += 1
        _check_blowup(v, time)
        if callback is not None:
            callback(time, SVCoords(s, [float(x) for x in v]))
        if steps % 1000 == 0:
            logger.debug('flow reached t=%.4g', time)
    return SVCoords(s, [float(x) for x in v])


def flow_trace(sv: SVCoords, T: SCALAR_TYPE, dt: SCALAR_TYPE,
               every: int = 100) -> tuple[list[list[float]], SVCoords]:
    """
    Rows (time, F_0, ..., F_q) sampled every few steps along the flow, starting with time 0, and the final point.
    """
    rows = [[0.0] + [float(f) for f in integrals_F(sv).F]]
    counter = {'steps': 0}

    def record(time: float, coords: SVCoords) -> None:
        counter['steps'] += 1
        if counter['steps'] % every == 0:
            rows.append([time] + [float(f) for f in integrals_F(coords).F])

    final = flow(sv, T, dt, record)
    if counter['steps'] % every:
        rows.append([float(T)] + [float(f) for f in integrals_F(final).F])
    return rows, final


def flow_drift(rows: Sequence[Sequence[float]]) -> float:
    """
    Largest relative drift of any integral column of a flow trace with respect to its initial value.
    """
    table = np.array(rows, dtype=float)[:, 1:]
    scale = np.maximum(1.0, np.abs(table[0]))
    return float(np.max(np.abs(table - table[0]) / scale))


def rk4_step_doubling_error(sv: SVCoords, dt: SCALAR_TYPE) -> float:
    """
    Difference between one RK4 step of size 2 dt and two steps of size dt, an estimate of the local error.
    """
    once = flow(sv, 2 * dt, 2 * dt)
    twice = flow(sv, 2 * dt, dt)
    return float(np.max(np.abs(np.array(once.v) - np.array(twice.v))))
