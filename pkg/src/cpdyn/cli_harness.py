"""
Command line interface of cpdyn.

Subcommands generate polygons, compute c-related partners, orbits, recuttings, integrals, flows, centers and the
pentagon zone data, and run the verification suites. Polygon-consuming commands read JSON from --input or stdin and
write JSON to --out or stdout. CSV tables go next to --out, named after it with a suffix.

General Documentation:
    Library errors are printed as 'error [<code>]: <message>' on stderr with exit status 2; argparse usage errors also
    exit with 2. verify exits with 1 when a property fails and 0 otherwise.

    Examples:
        cpdyn gen regular 5 > pentagon.json
        cpdyn --input pentagon.json --out orbit.json orbit --c 0.5 --steps 50
        cpdyn --seed 42 --trials 100 verify all
"""

import sys
import csv
import json
import logging
import argparse
import numpy as np

from pathlib import Path
from typing import Optional, Sequence

from .config import info
from .errors import CpdynError
from .verify import SUITES, run_suite
from .sampling import make_rng, random_closed_polygon, random_twisted_polygon, regular_polygon
from .recutting import recut
from .symplectic_center import casimir, casimir_bracket_sum, center, ijk
from .lax_crelation import AllRelated, iterate_c_dynamics, solve_c_related
from .integrals_flow import (closed_relations_defect, flow_drift, flow_trace, integrals_F, lax_trace_poly,
                             monodromy_trace_defect, weights)
from .smallgons import level_curve_points, pentagon_discriminant, zone_grid
from .core_polygon import (BACKENDS, PolygonData, SVCoords, format_scalar, parse_scalar, reconstruct, standard_frame,
                           sv_coords)

GEN_KINDS = ('regular', 'random-closed', 'random-twisted', 'from-sv')

logger = logging.getLogger(__name__)


# ======================== CLASSES =====================================================================================
class RunConfig:
    """
    Class storing the global options of one command line run.
    """

    def __init__(self, backend: str, tolerances: dict[str, float], seed: int, trials: int, out: Optional[Path],
                 input: Optional[Path]) -> None:
        self.backend = backend
        self.tolerances = tolerances
        self.seed = seed
        self.trials = trials
        self.out = out
        self.input = input

    def __str__(self) -> str:
        return f'RunConfig with backend \'{self.backend}\' and seed {self.seed}'

    @classmethod
    def from_args(cls, args: argparse.Namespace):
        """
        Converts parsed command line arguments to object.
        """
        return cls(args.scalar, dict(args.tol), args.seed, args.trials, args.out, args.input)

    def tolerance(self, name: str) -> float:
        return self.tolerances.get(name, getattr(info.tolerances, name))

    def csv_path(self, suffix: str) -> Optional[Path]:
        if self.out is None:
            return None
        return self.out.with_name(f'{self.out.stem}_{suffix}.csv')


# ======================== USEFUL FUNCTIONS ============================================================================
def _arity(text: str) -> int:
    n = int(text)
    if n < 3:
        raise argparse.ArgumentTypeError(f'polygons need n >= 3, got {n}')
    return n


def _tolerance_override(text: str) -> tuple[str, float]:
    name, sep, value = text.partition('=')
    if not sep or not hasattr(info.tolerances, name):
        raise argparse.ArgumentTypeError(f'expected NAME=VALUE with a known tolerance name, got {text!r}')
    return name, float(value)


def _scalar_list(text: str) -> list[str]:
    return [x for x in text.split(',') if x]


def read_json(config: RunConfig):
    if config.input is None:
        return json.load(sys.stdin)
    with open(config.input) as file:
        return json.load(file)


def read_polygon(config: RunConfig) -> PolygonData:
    return PolygonData.from_json(read_json(config), config.backend).validate()


def emit(config: RunConfig, payload: dict) -> None:
    text = json.dumps(payload, indent=2)
    if config.out is None:
        print(text)
    else:
        config.out.write_text(text + '\n')


def write_csv(config: RunConfig, suffix: str, header: Sequence[str], rows) -> Optional[Path]:
    """
    Writes a CSV next to --out; does nothing without --out.
    """
    path = config.csv_path(suffix)
    if path is None:
        return None
    with open(path, 'w', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_scalar(x) if not isinstance(x, (bool, int)) else int(x) for x in row])
    logger.debug('wrote %s', path)
    return path


def _expand_header(columns: Sequence[str], count: int) -> list[str]:
    header = []
    for name in columns:
        header.extend([f'F_{k}' for k in range(count)] if name == 'F' else [name])
    return header


def _integral_row(sv: SVCoords) -> list:
    return list(integrals_F(sv).F)


# ======================== COMMANDS ====================================================================================
def cmd_gen(config: RunConfig, args: argparse.Namespace) -> dict:
    if args.kind == 'from-sv':
        sv = SVCoords.from_json(read_json(config), config.backend)
        polygon = reconstruct(sv, standard_frame(sv))
    elif args.kind == 'regular':
        polygon = regular_polygon(args.n)
    else:
        rng = make_rng(config.seed)
        backend = 'rational' if config.backend == 'rational' else 'float'
        if args.kind == 'random-closed':
            polygon = random_closed_polygon(args.n, rng, backend)
        else:
            polygon = random_twisted_polygon(args.n, rng, backend)
    return polygon.to_json()


def cmd_relate(config: RunConfig, args: argparse.Namespace) -> dict:
    p = read_polygon(config)
    c = parse_scalar(args.c, config.backend)
    solutions = solve_c_related(p, c)
    if isinstance(solutions, AllRelated):
        return {'c': format_scalar(c), 'all_related': True, 'partners': []}
    return {'c': format_scalar(c), 'all_related': False,
            'partners': [{'t': format_scalar(pair.t_root), 'polygon': pair.q.to_json()} for pair in solutions]}


def cmd_orbit(config: RunConfig, args: argparse.Namespace) -> dict:
    p = read_polygon(config)
    c = parse_scalar(args.c, config.backend)
    orbit = iterate_c_dynamics(p, c, args.steps)
    rows = [[step] + _integral_row(sv_coords(q)) for step, q in enumerate(orbit)]
    write_csv(config, 'orbit', _expand_header(info.csv['orbit'], len(rows[0]) - 1), rows)
    return {'c': format_scalar(c), 'orbit': [q.to_json() for q in orbit]}


def cmd_recut(config: RunConfig, args: argparse.Namespace) -> dict:
    p = read_polygon(config)
    for _ in range(args.times):
        p = recut(p, args.start)
    return {'polygon': p.to_json(), 'sv': sv_coords(p).to_json()}


def cmd_integrals(config: RunConfig, args: argparse.Namespace) -> dict:
    p = read_polygon(config)
    sv = sv_coords(p)
    payload = {'sv': sv.to_json(), 'integrals': integrals_F(sv).to_json(), 'trace': lax_trace_poly(sv).to_json(),
               'monodromy_trace_defect': format_scalar(monodromy_trace_defect(sv))}
    if p.closed:
        payload['closed_relations_defect'] = [format_scalar(x) for x in closed_relations_defect(sv)]
    return payload


def cmd_flow(config: RunConfig, args: argparse.Namespace) -> dict:
    sv = sv_coords(read_polygon(config))
    rows, final = flow_trace(sv, args.T, args.dt, args.every)
    for row in rows:
        row.append(row[-1])
    write_csv(config, 'flow', _expand_header(info.csv['flow'], len(rows[0]) - 2), rows)
    drift = flow_drift([row[:-1] for row in rows])
    return {'T': args.T, 'dt': args.dt, 'final': final.to_json(), 'drift': drift,
            'K': format_scalar(float(sum(weights(final))))}


def cmd_center(config: RunConfig, args: argparse.Namespace) -> dict:
    p = read_polygon(config)
    I, J, K = ijk(p)
    return {'I': format_scalar(I), 'J': format_scalar(J), 'K': format_scalar(K), 'center': center(p).to_json(),
            'casimir': format_scalar(casimir(p)), 'casimir_bracket_sum': format_scalar(casimir_bracket_sum(p))}


def cmd_pentagon(config: RunConfig, args: argparse.Namespace) -> dict:
    s = [float(parse_scalar(x)) for x in args.s]
    c = float(parse_scalar(args.c))
    size = args.grid
    grid = zone_grid(s, np.linspace(0.05, 3.0, size), np.linspace(-12.0, 12.0, size))
    write_csv(config, 'zones', info.csv['zones'], [(float(a), float(b), e) for a, b, e in grid])
    levels = []
    for K in info.defaults.level_values:
        for chart in level_curve_points(s, K, np.linspace(-6.0, 6.0, 4 * size)):
            levels.append((K, float(chart.x), float(chart.y)))
    write_csv(config, 'levels', info.csv['levels'], levels)
    dd, roots = pentagon_discriminant(s, c)
    return {'s': [format_scalar(x) for x in s], 'c': format_scalar(c), 'D': format_scalar(dd),
            'forbidden_band': [format_scalar(float(r)) for r in roots], 'grid_points': len(grid),
            'level_points': len(levels)}


def cmd_verify(config: RunConfig, args: argparse.Namespace) -> dict:
    suites = SUITES if args.suite == 'all' else (args.suite,)
    artifacts = None if config.out is None else config.out.parent
    reports = [run_suite(name, config.seed, config.trials, config.tolerances, artifacts) for name in suites]
    return {'passed': all(r.passed for r in reports), 'suites': [r.to_json() for r in reports]}


COMMANDS = {'gen': cmd_gen, 'relate': cmd_relate, 'orbit': cmd_orbit, 'recut': cmd_recut, 'integrals': cmd_integrals,
            'flow': cmd_flow, 'center': cmd_center, 'pentagon': cmd_pentagon, 'verify': cmd_verify}


# ======================== MAIN ========================================================================================
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='cpdyn', description='c-relation dynamics on centroaffine polygons')
    parser.add_argument('--scalar', choices=BACKENDS, default=info.defaults.backend, help='scalar backend')
    parser.add_argument('--seed', type=int, default=info.defaults.seed, help='random seed')
    parser.add_argument('--trials', type=int, default=info.defaults.trials, help='trials per verified property')
    parser.add_argument('--tol', type=_tolerance_override, action='append', default=[], metavar='NAME=VALUE',
                        help='override a tolerance from info.json (repeatable)')
    parser.add_argument('--out', type=Path, default=None, help='JSON output file, stdout by default')
    parser.add_argument('--input', type=Path, default=None, help='JSON input file, stdin by default')
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    subparsers = parser.add_subparsers(dest='command', required=True)

    p_gen = subparsers.add_parser('gen', help='generate a polygon')
    p_gen.add_argument('kind', choices=GEN_KINDS)
    p_gen.add_argument('n', type=_arity, nargs='?', default=None)

    p_relate = subparsers.add_parser('relate', help='c-related partners of the input polygon')
    p_relate.add_argument('--c', default=str(info.defaults.c))

    p_orbit = subparsers.add_parser('orbit', help='iterate the c-relation')
    p_orbit.add_argument('--c', default=str(info.defaults.c))
    p_orbit.add_argument('--steps', type=int, default=50)

    p_recut = subparsers.add_parser('recut', help='full recutting')
    p_recut.add_argument('--start', type=int, default=1)
    p_recut.add_argument('--times', type=int, default=1)

    subparsers.add_parser('integrals', help='integrals, trace polynomial and closed-polygon relations')

    p_flow = subparsers.add_parser('flow', help='integrate the vector field of odd polygons')
    p_flow.add_argument('--T', type=float, default=info.defaults.flow_T)
    p_flow.add_argument('--dt', type=float, default=info.defaults.flow_dt)
    p_flow.add_argument('--every', type=int, default=100)

    subparsers.add_parser('center', help='Hamiltonians, Casimir and center')

    p_pentagon = subparsers.add_parser('pentagon', help='pentagon zone grid and level curves')
    p_pentagon.add_argument('--s', type=_scalar_list, default=['1'] * 5)
    p_pentagon.add_argument('--c', default=str(info.defaults.c))
    p_pentagon.add_argument('--grid', type=int, default=info.defaults.grid_size)

    p_verify = subparsers.add_parser('verify', help='run verification suites')
    p_verify.add_argument('suite', choices=SUITES + ('all',))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    if args.command == 'gen' and args.kind != 'from-sv' and args.n is None:
        parser.error(f'gen {args.kind} needs the number of vertices')
    if args.command == 'pentagon' and len(args.s) != 5:
        parser.error('--s needs five comma-separated side brackets')
    config = RunConfig.from_args(args)
    logger.debug('%s', config)
    try:
        payload = COMMANDS[args.command](config, args)
    except (ValueError, KeyError) as err:
        print(f'error [{getattr(err, "code", CpdynError.code)}]: {err}', file=sys.stderr)
        return 2
    emit(config, payload)
    if args.command == 'verify' and not payload['passed']:
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
