import csv
import json
from fractions import Fraction
from pathlib import Path

import pytest

from cpdyn import PolygonData
from cpdyn.cli_harness import RunConfig, build_parser, main

from conftest import points


def _write(path: Path, polygon: PolygonData) -> Path:
    path.write_text(json.dumps(polygon.to_json()))
    return path


def _values(data) -> list[Fraction]:
    return [Fraction(x) for x in data]


def _run(capsys, *argv: str) -> dict:
    assert main(list(argv)) == 0
    return json.loads(capsys.readouterr().out)


class TestGen:
    def test_regular(self, capsys):
        data = _run(capsys, 'gen', 'regular', '5')
        assert data['n'] == 5 and data['closed']
        assert len(data['vertices']) == 5

    def test_random_is_seeded(self, capsys):
        first = _run(capsys, '--seed', '3', '--scalar', 'rational', 'gen', 'random-closed', '4')
        second = _run(capsys, '--seed', '3', '--scalar', 'rational', 'gen', 'random-closed', '4')
        assert first == second
        assert '/' in first['vertices'][0][0]

    def test_from_sv(self, capsys, tmp_path: Path):
        path = tmp_path / 'sv.json'
        path.write_text(json.dumps({'s': ['1', '1', '1'], 'v': ['1', '1', '1']}))
        data = _run(capsys, '--scalar', 'rational', '--input', str(path), 'gen', 'from-sv')
        assert not data['closed']
        assert _values(sum(data['monodromy'], [])) == [-1, 0, 0, -1]

    def test_missing_arity(self):
        with pytest.raises(SystemExit) as err:
            main(['gen', 'regular'])
        assert err.value.code == 2

    def test_small_arity(self):
        with pytest.raises(SystemExit):
            main(['gen', 'regular', '2'])


class TestPolygonCommands:
    def test_relate(self, capsys, tmp_path: Path, triangle: PolygonData):
        path = _write(tmp_path / 'triangle.json', triangle)
        data = _run(capsys, '--scalar', 'rational', '--input', str(path), 'relate', '--c', '1')
        assert data['c'] == '1/1' and not data['all_related']
        assert len(data['partners']) == 1
        q = PolygonData.from_json(data['partners'][0]['polygon'], 'rational')
        assert q.vertices == tuple(points((1, 1), (-1, 0), (0, -1)))

    def test_integrals(self, capsys, tmp_path: Path, triangle: PolygonData):
        path = _write(tmp_path / 'triangle.json', triangle)
        data = _run(capsys, '--scalar', 'rational', '--input', str(path), 'integrals')
        assert _values(data['integrals']['F']) == [2, -3]
        assert _values(data['trace']) == [0, -3, 0, 2]
        assert _values(data['closed_relations_defect']) == [0, 0]

    def test_center(self, capsys, tmp_path: Path, triangle: PolygonData):
        path = _write(tmp_path / 'triangle.json', triangle)
        data = _run(capsys, '--scalar', 'rational', '--input', str(path), 'center')
        assert _values([data['I'], data['J'], data['K']]) == [-1, -1, -1]
        assert _values([data['casimir'], data['casimir_bracket_sum']]) == [3, 3]

    def test_recut(self, capsys, tmp_path: Path, quadrilateral: PolygonData):
        path = _write(tmp_path / 'quad.json', quadrilateral)
        data = _run(capsys, '--scalar', 'rational', '--input', str(path), 'recut', '--times', '3')
        assert _values(data['sv']['s']) == [1, 2, 3, 2]

    def test_orbit_writes_csv(self, tmp_path: Path, pentagon: PolygonData):
        path = _write(tmp_path / 'pentagon.json', pentagon)
        out = tmp_path / 'orbit.json'
        assert main(['--input', str(path), '--out', str(out), 'orbit', '--c', '0.5', '--steps', '3']) == 0
        assert len(json.loads(out.read_text())['orbit']) == 4
        with open(tmp_path / 'orbit_orbit.csv') as file:
            rows = list(csv.reader(file))
        assert rows[0] == ['step', 'F_0', 'F_1', 'F_2']
        assert len(rows) == 5

    def test_library_error(self, capsys, tmp_path: Path, quadrilateral: PolygonData):
        path = _write(tmp_path / 'quad.json', quadrilateral)
        assert main(['--input', str(path), 'flow', '--T', '0.1']) == 2
        assert capsys.readouterr().err.startswith('error [integrals_flow.EvenArity]')

    def test_zero_c(self, capsys, tmp_path: Path, triangle: PolygonData):
        path = _write(tmp_path / 'triangle.json', triangle)
        assert main(['--input', str(path), 'relate', '--c', '0']) == 2
        assert 'lax_crelation.ZeroC' in capsys.readouterr().err


class TestPentagonAndVerify:
    def test_pentagon_tables(self, tmp_path: Path):
        out = tmp_path / 'zones.json'
        assert main(['--out', str(out), 'pentagon', '--c', '1.5', '--grid', '5']) == 0
        data = json.loads(out.read_text())
        assert data['grid_points'] == 25
        assert len(data['forbidden_band']) == 2
        with open(tmp_path / 'zones_zones.csv') as file:
            rows = list(csv.reader(file))
        assert rows[0] == ['c', 'K', 'exists'] and len(rows) == 26
        assert (tmp_path / 'zones_levels.csv').exists()

    def test_pentagon_needs_five_sides(self):
        with pytest.raises(SystemExit):
            main(['pentagon', '--s', '1,1,1'])

    def test_verify(self, capsys):
        data = _run(capsys, '--trials', '3', 'verify', 'core')
        assert data['passed']
        assert [suite['suite'] for suite in data['suites']] == ['core']

    def test_tolerance_override(self):
        args = build_parser().parse_args(['--tol', 'branch=1e-3', 'verify', 'core'])
        config = RunConfig.from_args(args)
        assert config.tolerance('branch') == 1e-3
        assert config.tolerance('period') == 1e-6
        assert config.csv_path('orbit') is None

    def test_unknown_tolerance(self):
        with pytest.raises(SystemExit):
            main(['--tol', 'nonsense=1', 'verify', 'core'])
