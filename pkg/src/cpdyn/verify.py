"""
Property suites checking the library against its own identities on random instances.

Each suite is a list of named properties. A property draws its instances from its own generator,
default_rng([seed, property index]), so a report depends only on the seed and the trial count. Exact identities run
over fractions and must hold with zero residual; numerical ones run over floats against the tolerances in info.json.

General Documentation:
    run_suite returns a SuiteReport. Its to_json output lists, per property, whether it passed, the worst residual and
    a witness describing the first failing instance. The command line exits with 1 when any property fails.
"""

import csv
import logging
import numpy as np

from pathlib import Path
from fractions import Fraction
from typing import Callable, Mapping, Optional

from .config import info
from .errors import CpdynError
from . import core_polygon as cp
from . import lax_crelation as lx
from . import integrals_flow as itf
from . import recutting as rc
from . import smallgons as sg
from . import symplectic_center as sc
from .sampling import (critical_polygon, make_rng, random_closed_polygon, random_scalar, random_sl2, random_sv,
                       random_tangent)

SUITES = tuple(info.suites)

logger = logging.getLogger(__name__)


# ======================== CLASSES =====================================================================================
class PropertyResult:
    """
    Class storing the outcome of one property over all its trials.
    """

    def __init__(self, name: str, passed: bool, worst: float, trials: int, witness: Optional[str] = None) -> None:
        self.name = name
        self.passed = passed
        self.worst = worst
        self.trials = trials
        self.witness = witness

    def __str__(self) -> str:
        return f'{self.name}: {"pass" if self.passed else "FAIL"} worst={self.worst:.3g} over {self.trials} trials'

    def to_json(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'worst': self.worst, 'trials': self.trials,
                'witness': self.witness}


class SuiteReport:
    """
    Class storing the results of one suite.
    """

    def __init__(self, suite: str, seed: int, trials: int, properties: list[PropertyResult]) -> None:
        self.suite = suite
        self.seed = seed
        self.trials = trials
        self.properties = properties

    def __str__(self) -> str:
        return f'SuiteReport {self.suite}: ' + ('pass' if self.passed else 'FAIL')

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def to_json(self) -> dict:
        return {'suite': self.suite, 'seed': self.seed, 'trials': self.trials, 'passed': self.passed,
                'properties': [p.to_json() for p in self.properties]}


class Trial:
    """
    Accumulates residuals of one property and remembers the first failing instance.
    """

    def __init__(self, tol: float) -> None:
        self.tol = tol
        self.worst = 0.0
        self.count = 0
        self.witness: Optional[str] = None

    def record(self, value, witness: str, tol: Optional[float] = None) -> None:
        value = float(abs(value))
        self.count += 1
        self.worst = max(self.worst, value)
        if value > (self.tol if tol is None else tol) and self.witness is None:
            self.witness = witness

    def fail(self, witness: str) -> None:
        self.count += 1
        self.worst = float('inf')
        if self.witness is None:
            self.witness = witness

    def result(self, name: str) -> PropertyResult:
        return PropertyResult(name, self.witness is None, self.worst, self.count, self.witness)


# ======================== USEFUL FUNCTIONS ============================================================================
def _polygon_str(p: cp.PolygonData) -> str:
    return str([[cp.format_scalar(x) for x in q] for q in p.vertices])


def _max_abs(values) -> float:
    return max((abs(float(x)) for x in values), default=0.0)


def _rational_c(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(1, 13)), int(rng.integers(1, 5))) * (1 if rng.random() < 0.5 else -1)


def _closed(rng: np.random.Generator, backend: str, low: int = 3, high: int = 7, positive: bool = False):
    return random_closed_polygon(int(rng.integers(low, high + 1)), rng, backend, positive)


def _displaced(p: cp.PolygonData, U, h: float) -> cp.PolygonData:
    return cp.PolygonData([q + u * h for q, u in zip(p.vertices, U)], True)


def _random_chart(rng: np.random.Generator, s, bound: float = 3.0) -> sg.PentagonChart:
    while True:
        chart = sg.PentagonChart(float(rng.uniform(-bound, bound)), float(rng.uniform(-bound, bound)), s)
        try:
            sg.chart_polygon(chart)
            return chart
        except CpdynError:
            continue


# ======================== CORE ========================================================================================
def prop_reconstruct_roundtrip(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = _closed(rng, 'rational')
        sv = cp.sv_coords(p)
        q = cp.reconstruct(sv, (p.vertices[0], p.vertices[1]))
        trial.record(0 if cp.vertices_close(p, q) and q.closed else 1, _polygon_str(p))
    return trial


def prop_monodromy_continuants(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for n in range(3, 9):
        for _ in range(trials):
            sv = random_sv(n, rng)
            difference = cp.monodromy(sv) - cp.monodromy_via_continuants(sv)
            trial.record(_max_abs(difference.entries()), str(sv))
    return trial


def prop_closure_defects(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        sv = cp.sv_coords(_closed(rng, 'rational'))
        trial.record(_max_abs(cp.closure_defect(sv) + cp.closure_sign_defect(sv)), str(sv))
    return trial


def prop_ptolemy(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        sv = cp.sv_coords(_closed(rng, 'rational', 4, 5))
        trial.record(_max_abs(cp.ptolemy_defect(sv)), str(sv))
    return trial


def prop_side_map_rank(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = _closed(rng, 'float')
        if cp.is_regular_value(cp.sv_coords(p).s):
            trial.record(cp.side_map_rank(p) - p.n, _polygon_str(p))
        critical = critical_polygon(2 * int(rng.integers(2, 4)), rng)
        s = [cp.bracket(critical.vertex(i), critical.vertex(i + 1)) for i in range(critical.n)]
        drops = not cp.is_regular_value(s) and cp.side_map_rank(critical) < critical.n
        trial.record(0 if drops else 1, f'critical {_polygon_str(critical)}')
    return trial


# ======================== LAX =========================================================================================
def _partners(rng, backend: str, trials: int):
    for _ in range(trials):
        p = _closed(rng, backend)
        c = _rational_c(rng) if backend == 'rational' else float(rng.uniform(0.1, 3.0))
        try:
            solutions = lx.solve_c_related(p, c)
        except CpdynError:
            continue
        if isinstance(solutions, lx.AllRelated):
            continue
        yield p, c, solutions


def prop_partners_related(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for p, c, solutions in _partners(rng, 'float', trials):
        for pair in solutions:
            trial.record(0 if lx.is_c_related(p, pair.q, c, tol) else 1, f'{_polygon_str(p)} c={c}')
    return trial


def prop_lax_conjugacy(rng, trials, tol) -> Trial:
    trial = Trial(tol)
    for p, c, solutions in _partners(rng, 'float', trials):
        for pair in solutions:
            sp, sq = cp.sv_coords(p), cp.sv_coords(pair.q)
            for lam in rng.uniform(0.1, 3.0, 10):
                try:
                    a, b = itf.conjugacy_invariant(sp, float(lam)), itf.conjugacy_invariant(sq, float(lam))
                except CpdynError:
                    continue
                trial.record(abs(a - b) / max(1.0, abs(a)), f'{_polygon_str(p)} c={c} lambda={lam}')
    return trial


def prop_reflection_chain(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        a = random_closed_polygon(int(rng.choice([3, 5, 7])), rng, 'rational')
        start = cp.Vec2(random_scalar(rng), random_scalar(rng))
        try:
            lx.reflection_chain(a, start)
            trial.record(0, '')
        except lx.NotRelatedError:
            trial.fail(_polygon_str(a))
        except CpdynError:
            continue
    return trial


def prop_bianchi(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = _closed(rng, 'float')
        c, d = float(rng.uniform(0.1, 2.0)), float(rng.uniform(0.1, 2.0))
        qs, rs = lx.real_partners(p, c), lx.real_partners(p, d)
        if not qs or not rs:
            continue
        try:
            s = lx.bianchi_complete(p, qs[0], rs[0], c, d)
        except lx.NotRelatedError:
            trial.fail(f'{_polygon_str(p)} c={c} d={d}')
            continue
        except CpdynError:
            continue
        # each butterfly equation compares two brackets already checked against c or d
        scale = 2 * max([1.0, c, d] + [abs(float(x)) for a in (qs[0], rs[0]) for x in cp.sv_coords(a).s])
        kinds = [lx.classify_butterfly((p.vertex(i), qs[0].vertex(i), s.vertex(i), rs[0].vertex(i)), tol * scale)
                 for i in range(p.n)]
        trial.record(sum(kind is not lx.ButterflyClass.BUTTERFLY for kind in kinds),
                     f'{_polygon_str(p)} c={c} d={d} {[kind.value for kind in kinds]}')
    return trial


# ======================== INTEGRALS ===================================================================================
def prop_trace_poly(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        sv = random_sv(int(rng.integers(3, 8)), rng)
        F = itf.integrals_F(sv)
        poly = itf.lax_trace_poly(sv)
        residuals = [poly.coefficients[sv.n - 2 * k] - F[k] for k in range(len(F))]
        residuals.append(0 if poly.parity_ok(sv.n) else 1)
        trial.record(_max_abs(residuals), str(sv))
    return trial


def prop_closed_relations(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        sv = cp.sv_coords(_closed(rng, 'rational'))
        trial.record(_max_abs(itf.closed_relations_defect(sv)), str(sv))
    return trial


def prop_monodromy_trace(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        sv = random_sv(int(rng.integers(3, 8)), rng)
        trial.record(itf.monodromy_trace_defect(sv), str(sv))
    return trial


def prop_conservation_c(rng, trials, tol) -> Trial:
    trial = Trial(tol)
    for p, c, solutions in _partners(rng, 'float', trials):
        F = itf.integrals_F(cp.sv_coords(p)).F
        for pair in solutions:
            G = itf.integrals_F(cp.sv_coords(pair.q)).F
            trial.record(max(abs(f - g) / max(1.0, abs(f)) for f, g in zip(F, G)), f'{_polygon_str(p)} c={c}')
    return trial


def prop_dressing_scale(rng, trials, tol) -> Trial:
    trial = Trial(tol)
    samples = [random_sv(int(rng.choice([3, 5, 7])), rng, 'float') for _ in range(max(trials, 2))]
    k, worst = itf.fit_dressing_scale(samples)
    trial.record(k - itf.DRESSING_TIME_SCALE, f'fitted scale {k}')
    trial.record(worst / max(1.0, _max_abs(itf.xi_pushforward(samples[0]))), f'fit residual {worst}')
    return trial


def prop_flow_conservation(rng, trials, tol) -> Trial:
    trial = Trial(info.tolerances.flow_drift)
    s = [1.0] * 5
    for _ in range(max(1, trials // 20)):
        sv = sg.chart_sv(_random_chart(rng, s, 2.0))
        try:
            rows, _ = itf.flow_trace(sv, 1.0, info.defaults.flow_dt)
        except itf.StepBlowupError:
            continue
        trial.record(itf.flow_drift(rows), str(sv))
        trial.record(itf.rk4_step_doubling_error(sv, info.defaults.flow_dt), f'step doubling at {sv}')
    return trial


def prop_gradient_F0(rng, trials, tol) -> Trial:
    trial = Trial(tol)
    for _ in range(max(1, trials // 10)):
        sv = cp.sv_coords(_closed(rng, 'float', 4, 7))
        scale = max(1.0, abs(float(itf.integrals_F(sv)[0])))
        trial.record(itf.gradient_F0_on_closed(sv, 5, rng) / scale, str(sv))
    return trial


# ======================== RECUTTING ===================================================================================
def prop_braid(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = _closed(rng, 'rational', 4, 7)
        checks = rc.braid_check(p)
        degenerate = [ch for ch in checks if ch.witness]
        if degenerate:
            continue
        failed = [ch.name for ch in checks if not ch.passed]
        trial.record(len(failed), f'{_polygon_str(p)} {failed}')
    return trial


def prop_recut_conservation(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = _closed(rng, 'rational')
        try:
            q = rc.recut(p)
        except rc.DegenerateDiagonalError:
            continue
        F, G = itf.integrals_F(cp.sv_coords(p)).F, itf.integrals_F(cp.sv_coords(q)).F
        residuals = [f - g for f, g in zip(F, G)]
        residuals += [a - b for a, b in zip(sc.center(p).coefficients(), sc.center(q).coefficients())]
        trial.record(_max_abs(residuals), _polygon_str(p))
    return trial


def prop_quad_period(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = random_closed_polygon(4, rng, 'rational')
        try:
            q = rc.recut(rc.recut(rc.recut(p)))
        except rc.DegenerateDiagonalError:
            continue
        trial.record(0 if cp.sv_coords(q) == cp.sv_coords(p) else 1, _polygon_str(p))
    return trial


def prop_recut_commutes(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for p, c, solutions in _partners(rng, 'float', trials):
        if not solutions:
            continue
        checks = rc.recut_commutes_with_c(p, c)
        failed = [ch.name for ch in checks if not ch.passed and not ch.witness]
        trial.record(len(failed), f'{_polygon_str(p)} c={c} {failed}')
    return trial


# ======================== SYMPLECTIC ==================================================================================
def _tangent_pair(rng):
    p = _closed(rng, 'rational')
    return p, sc.TangentVector(random_tangent(p, rng)), sc.TangentVector(random_tangent(p, rng))


def prop_omega_antisymmetry(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p, U, V = _tangent_pair(rng)
        trial.record(abs(sc.omega(p, U, V) + sc.omega(p, V, U)) + abs(sc.omega(p, U, U)), _polygon_str(p))
    return trial


def prop_hamiltonians(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p, _, V = _tangent_pair(rng)
        dI, dJ, dK = sc.ijk_differential(p, V)
        values = [sc.omega(p, sc.sl2_field(p, 'e'), V) + dI, sc.omega(p, sc.sl2_field(p, 'h'), V) - dJ,
                  sc.omega(p, sc.sl2_field(p, 'f'), V) - dK]
        trial.record(_max_abs(values), _polygon_str(p))
    return trial


def prop_sl2_action(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = _closed(rng, 'rational')
        I, J, K = sc.ijk(p)
        expected = {'e': (0, 2 * I, J), 'h': (2 * I, 0, -2 * K), 'f': (J, 2 * K, 0)}
        for kind, values in expected.items():
            got = sc.ijk_differential(p, sc.sl2_field(p, kind))
            trial.record(_max_abs([a - b for a, b in zip(got, values)]), f'{_polygon_str(p)} {kind}')
    return trial


def prop_casimir(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = _closed(rng, 'rational')
        m = random_sl2(rng)
        values = [sc.casimir(p) - sc.casimir_bracket_sum(p), sc.casimir(p) - sc.casimir(cp.act(m, p))]
        moved = sc.center(cp.act(m, p))
        values += [a - b for a, b in zip(moved.coefficients(),
                                         sc.center(p).pullback(sc.center_action(m)).coefficients())]
        trial.record(_max_abs(values), _polygon_str(p))
    return trial


def prop_center_additivity(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = _closed(rng, 'rational', 4, 7)
        k = int(rng.integers(2, p.n - 1))
        first, second = sc.cut(p, k)
        total = sc.center(first) + sc.center(second)
        trial.record(_max_abs(a - b for a, b in zip(total.coefficients(), sc.center(p).coefficients())),
                     f'{_polygon_str(p)} k={k}')
    return trial


def prop_center_conic(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = random_closed_polygon(3, rng, 'rational')
        k = sc.center_conic_constant(p.vertices)
        expected = sc.circumconic(p.vertices).swap() * k
        trial.record(_max_abs(a - b for a, b in zip(sc.center(p).coefficients(), expected.coefficients())),
                     _polygon_str(p))
    return trial


def prop_omega_recut(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p, U, V = _tangent_pair(rng)
        try:
            q, RU = rc.recut_tangent(p, U.vectors)
            _, RV = rc.recut_tangent(p, V.vectors)
        except rc.DegenerateDiagonalError:
            continue
        trial.record(sc.omega(p, U, V) - sc.omega(q, sc.TangentVector(RU), sc.TangentVector(RV)), _polygon_str(p))
    return trial


def prop_omega_c_relation(rng, trials, tol) -> Trial:
    trial = Trial(tol)
    h = info.tolerances.finite_difference_step
    for p, c, solutions in _partners(rng, 'float', max(1, trials // 5)):
        U, V = sc.TangentVector(random_tangent(p, rng)), sc.TangentVector(random_tangent(p, rng))
        for pair in solutions:
            try:
                pushed = []
                for W in (U, V):
                    plus = lx.partner_near(_displaced(p, W.vectors, h), c, pair.q)
                    minus = lx.partner_near(_displaced(p, W.vectors, -h), c, pair.q)
                    pushed.append(sc.TangentVector([(a - b) / (2 * h) for a, b in zip(plus.vertices,
                                                                                         minus.vertices)]))
                before = sc.omega(p, U, V)
                after = sc.omega(pair.q, pushed[0], pushed[1], tol)
            except CpdynError:
                continue
            trial.record((before - after) / max(1.0, abs(before)), f'{_polygon_str(p)} c={c}')
    return trial


# ======================== SMALLGONS ===================================================================================
def prop_triangle_identity(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = random_closed_polygon(3, rng, 'rational')
        c = _rational_c(rng)
        trial.record(sg.triangle_identity_check(cp.sv_coords(p).s, c, p), f'{_polygon_str(p)} c={c}')
    return trial


def prop_triangle_existence(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        s = [random_scalar(rng, 'rational', 3) for _ in range(3)]
        c = _rational_c(rng)
        report = sg.triangle_analysis(s, c)
        partners = sg.triangle_partner_matrices(sg.triangle_from_sides(s), c)
        trial.record(0 if report.solver_agrees and bool(partners) == report.exists else 1, f's={s} c={c}')
    return trial


def prop_quad_discriminant(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        p = random_closed_polygon(4, rng, 'rational')
        c = _rational_c(rng)
        try:
            u, v, disc = sg.quad_partner_quadratic(p, c)
            lax_u, lax_v = sg.quad_lax_quadratic(p, c)
        except CpdynError:
            continue
        lhs, rhs = sg.quad_cond4(cp.sv_coords(p).s, c)
        solutions = lx.solve_c_related(p, c)
        found = isinstance(solutions, lx.AllRelated) or bool(solutions)
        agree = (disc >= 0) == (lhs >= rhs) == found
        trial.record(_max_abs([u - lax_u, v - lax_v, 0 if agree else 1]), f'{_polygon_str(p)} c={c}')
    return trial


def prop_pentagon_flow(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    for _ in range(trials):
        s = [random_scalar(rng, 'rational', 3) for _ in range(5)]
        x, y = random_scalar(rng, 'rational', 3), random_scalar(rng, 'rational', 3)
        try:
            residuals = sg.pentagon_flow_check(sg.PentagonChart(x, y, s))
        except CpdynError:
            continue
        trial.record(_max_abs(residuals), f's={s} x={x} y={y}')
    return trial


def prop_pentagon_zones(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    s = [1.0] * 5
    for _ in range(trials):
        chart = _random_chart(rng, s)
        c = float(rng.uniform(0.2, 3.0))
        K = float(sg.pentagon_K(chart))
        _, roots = sg.pentagon_discriminant(s, c)
        if any(abs(K - r) < 1e-6 for r in roots) or any(abs(c - x) < 1e-6 for x in s):
            continue
        try:
            found = sg.solver_partner_exists(chart, c)
        except CpdynError:
            continue
        trial.record(0 if found == sg.pentagon_partner_exists(s, c, K) else 1, f'{chart} c={c} K={K}')
    return trial


def prop_porism(rng, trials, tol) -> Trial:
    trial = Trial(0.0)
    s, c = [1.0] * 5, 0.5
    count = max(10, trials // 5)
    for K in info.defaults.level_values:
        xs = np.sort(rng.uniform(1.2, 6.0, count))
        periods = sg.level_curve_periods(s, float(K), c, xs, info.defaults.max_period, tol)
        found = sorted({str(m) for m in periods})
        trial.record(0 if len(periods) >= 10 and len(found) == 1 else 1,
                     f'K={K} c={c} periods {found} over {len(periods)} points')
    return trial


PROPERTIES: dict[str, list[tuple[str, Callable, str]]] = {
    'core': [('reconstruct_roundtrip', prop_reconstruct_roundtrip, 'float_equal'),
             ('monodromy_continuants', prop_monodromy_continuants, 'float_equal'),
             ('closure_defects', prop_closure_defects, 'float_equal'),
             ('ptolemy', prop_ptolemy, 'float_equal'),
             ('side_map_rank', prop_side_map_rank, 'float_equal')],
    'lax': [('partners_related', prop_partners_related, 'branch'),
            ('lax_conjugacy', prop_lax_conjugacy, 'conservation'),
            ('reflection_chain', prop_reflection_chain, 'float_equal'),
            ('bianchi', prop_bianchi, 'branch')],
    'integrals': [('trace_poly', prop_trace_poly, 'float_equal'),
                  ('closed_relations', prop_closed_relations, 'float_equal'),
                  ('monodromy_trace', prop_monodromy_trace, 'float_equal'),
                  ('conservation_c', prop_conservation_c, 'conservation'),
                  ('dressing_scale', prop_dressing_scale, 'conservation'),
                  ('flow_conservation', prop_flow_conservation, 'flow_drift'),
                  ('gradient_F0', prop_gradient_F0, 'finite_difference')],
    'recutting': [('braid', prop_braid, 'float_equal'),
                  ('recut_conservation', prop_recut_conservation, 'float_equal'),
                  ('quad_period', prop_quad_period, 'float_equal'),
                  ('recut_commutes', prop_recut_commutes, 'conservation')],
    'symplectic': [('omega_antisymmetry', prop_omega_antisymmetry, 'float_equal'),
                   ('hamiltonians', prop_hamiltonians, 'float_equal'),
                   ('sl2_action', prop_sl2_action, 'float_equal'),
                   ('casimir', prop_casimir, 'float_equal'),
                   ('center_additivity', prop_center_additivity, 'float_equal'),
                   ('center_conic', prop_center_conic, 'float_equal'),
                   ('omega_recut', prop_omega_recut, 'float_equal'),
                   ('omega_c_relation', prop_omega_c_relation, 'omega_pullback')],
    'smallgons': [('triangle_identity', prop_triangle_identity, 'float_equal'),
                  ('triangle_existence', prop_triangle_existence, 'float_equal'),
                  ('quad_discriminant', prop_quad_discriminant, 'float_equal'),
                  ('pentagon_flow', prop_pentagon_flow, 'float_equal'),
                  ('pentagon_zones', prop_pentagon_zones, 'float_equal'),
                  ('porism', prop_porism, 'period')],
}


# ======================== RUNNING =====================================================================================
def _property_index(suite: str, position: int) -> int:
    offset = 0
    for name in SUITES:
        if name == suite:
            return offset + position
        offset += len(PROPERTIES[name])
    raise ValueError(f'Unknown suite {suite!r}.')


def write_zone_grid(path: Path, s=None, size: Optional[int] = None) -> Path:
    """
    Writes the (c, K, exists) pentagon zone grid as CSV.
    """
    s = [1.0] * 5 if s is None else s
    size = info.defaults.grid_size if size is None else size
    rows = sg.zone_grid(s, np.linspace(0.05, 3.0, size), np.linspace(-12.0, 12.0, size))
    with open(path, 'w', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(info.csv['zones'])
        for c, K, exists in rows:
            writer.writerow([cp.format_scalar(float(c)), cp.format_scalar(float(K)), int(exists)])
    return path


def run_suite(suite: str, seed: Optional[int] = None, trials: Optional[int] = None,
              tolerances: Optional[Mapping[str, float]] = None, artifact_dir: Optional[Path] = None) -> SuiteReport:
    """
    Runs one suite.

    Args:
        suite: One of SUITES.
        seed: The seed, info.json default otherwise.
        trials: Trials per property.
        tolerances: Overrides of info.json tolerances by name.
        artifact_dir: Where the smallgons suite writes its zone grid CSV, if given.

    Returns:
        The SuiteReport.

    """
    if suite not in PROPERTIES:
        raise ValueError(f'Unknown suite {suite!r}, expected one of {SUITES} or all.')
    seed = info.defaults.seed if seed is None else seed
    trials = info.defaults.trials if trials is None else trials
    tolerances = {} if tolerances is None else tolerances
    results = []
    for position, (name, prop, tol_name) in enumerate(PROPERTIES[suite]):
        rng = make_rng(seed, _property_index(suite, position))
        tol = tolerances.get(tol_name, getattr(info.tolerances, tol_name))
        logger.debug('suite %s: running %s', suite, name)
        try:
            result = prop(rng, trials, tol).result(name)
        except CpdynError as err:
            result = PropertyResult(name, False, float('inf'), 0, f'{err.code}: {err}')
        results.append(result)
    if suite == 'smallgons' and artifact_dir is not None:
        write_zone_grid(Path(artifact_dir) / 'zones.csv')
    return SuiteReport(suite, seed, trials, results)


def run_all(seed: Optional[int] = None, trials: Optional[int] = None,
            tolerances: Optional[Mapping[str, float]] = None,
            artifact_dir: Optional[Path] = None) -> list[SuiteReport]:
    return [run_suite(name, seed, trials, tolerances, artifact_dir) for name in SUITES]
