import json
import pathlib

import pytest
from click.testing import CliRunner

from reciprocals import Oracle
from reciprocals.cli import main
from reciprocals.oracle import Check, GradedReport

ROOT = pathlib.Path(__file__).parent

DATA_PATHS = sorted(ROOT.glob('data/*.in'))


@pytest.fixture(params=DATA_PATHS, ids=lambda p: p.name)
def data(request):
    inp = request.param
    outp = inp.with_suffix('.out')
    with inp.open() as inf, outp.open() as outf:
        return next(inf).rstrip(), inf.read(), outf.read()


@pytest.fixture
def runner():
    return CliRunner()


def test_data(data, runner):
    args, input, output = data
    result = runner.invoke(main, args, input, catch_exceptions=False)
    assert result.output == output
    assert result.exit_code == 0


def test_version(runner):
    result = runner.invoke(main, ['--version'])
    assert result.exit_code == 0
    assert result.output.startswith('reciprocals, version ')


@pytest.mark.parametrize('args', [
    ['series', '--builtin', 'braid:3', '--degree', '6'],
    ['poincare', '--builtin', 'generic:5,3'],
])
def test_json_matches_text(runner, args):
    text = runner.invoke(main, args).output
    data = json.loads(runner.invoke(main, args + ['--json']).output)
    assert data['coefficients'] == [int(c) for c in text.split()]


def test_json_lattice(runner):
    text = runner.invoke(main, ['lattice', '--builtin', 'braid:3']).output
    result = runner.invoke(main, ['lattice', '--builtin', 'braid:3',
                                  '--json'])
    flats = json.loads(result.output)['flats']
    for line, flat in zip(text.splitlines()[1:], flats):
        fid, codim, mobius, support = line.split()
        assert (int(fid), int(codim), int(mobius)) == (
            flat['id'], flat['codim'], flat['mobius'])
        assert support == (','.join(map(str, flat['support'])) or '-')


def test_json_verify(runner):
    args = ['verify', '--builtin', 'boolean:2', '--max-degree', '2']
    text = runner.invoke(main, args).output.splitlines()
    result = runner.invoke(main, args + ['--json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['passed']
    for line, row in zip(text, data['degrees']):
        assert line.startswith(
            f"degree {row['degree']}: C {row['dim_c']} AO {row['dim_ao']} "
            f"J {row['dim_j']} dC {row['dim_del_plus_c']} ")
    assert text[-1] == f"all {len(data['checks'])} checks passed"


def test_json_nbc(runner):
    result = runner.invoke(main, ['nbc', '--builtin', 'braid:3', '--json'])
    data = json.loads(result.output)
    assert data['passed']
    assert data['counts'] == [1, 3, 2]
    assert data['broken_circuits'] == [[2, 3]]
    assert data['flats'][4]['sets'] == [[1, 2], [1, 3]]
    assert data['flats'][4]['support'] == [1, 2, 3]


def test_json_decompose(runner):
    result = runner.invoke(main, ['decompose', '-', '--tuple', '2,3',
                                  '--json'], "2\n1 0\n0 1\n1 1\n")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['target'] == [2, 3]
    assert data['reproduced']
    assert [(t['nbc'], t['coefficient']) for t in data['terms']] == [
        ([1, 2], '1'), ([1, 3], '-1')]
    assert data['residue'] == [{'nbc': [1, 2], 'coefficient': '1'},
                               {'nbc': [1, 3], 'coefficient': '-1'}]


def test_input_file(runner, tmp_path):
    path = tmp_path / 'braid.txt'
    path.write_text("3\n1 -1 0\n0 1 -1\n1 0 -1\n")
    result = runner.invoke(main, ['series', str(path), '--degree', '3'])
    assert result.exit_code == 0
    assert result.output == '1 3 5 7\n'


def test_order_keeps_counts(runner):
    result = runner.invoke(main, ['nbc', '--builtin', 'braid:3',
                                  '--order', '3,1,2'])
    assert result.exit_code == 0
    assert 'counts 1 3 2' in result.output
    assert 'flat 4 codim 2 mobius 2 count 2 ok: (1,2) (1,3)' in result.output


def test_verify_jobs(runner):
    args = ['verify', '--builtin', 'boolean:2', '--max-degree', '2']
    single = runner.invoke(main, args)
    parallel = runner.invoke(main, args + ['--jobs', '2'])
    assert parallel.exit_code == 0
    assert parallel.output == single.output


def test_defaults_file(runner, tmp_path):
    path = tmp_path / 'defaults.ini'
    path.write_text("[reciprocals]\ndegree = 3\n\n[quick]\ndegree = 1\n"
                    "format = json\n")
    args = ['--defaults-file', str(path), 'series', '--builtin', 'braid:3']
    assert runner.invoke(main, args).output == '1 3 5 7\n'
    assert runner.invoke(main, args + ['--degree', '2']).output == '1 3 5\n'
    result = runner.invoke(main, ['--defaults-file', str(path),
                                  '--defaults-group', 'quick'] + args[2:])
    assert json.loads(result.output) == {'coefficients': [1, 3]}


def test_verbose(runner):
    result = runner.invoke(main, ['-vv', 'poincare', '--builtin', 'braid:3'])
    assert result.exit_code == 0


@pytest.mark.parametrize('args,input', [
    (['poincare'], None),
    (['poincare', '-'], "2\n1 0\n2 0\n"),
    (['poincare', '-'], "2\n1 zero\n"),
    (['poincare', '--builtin', 'cube:3'], None),
    (['poincare', 'does-not-exist.txt'], None),
    (['poincare', '-'], b"2\n1 0\n\xff 1\n"),
    (['nbc', '--builtin', 'braid:3', '--order', '1,1,2'], None),
    (['series', '--generic', '2', '3'], None),
    (['decompose', '--builtin', 'braid:3', '--tuple', '1,4'], None),
    (['verify', '--builtin', 'braid:3', '--budget', '10'], None),
])
def test_input_errors(runner, args, input):
    result = runner.invoke(main, args, input)
    assert result.exit_code == 2
    assert 'Error' in result.output


@pytest.mark.parametrize('args', [
    ['frobnicate'],
    ['series', '--builtin', 'braid:3', '--degree', 'many'],
    ['decompose', '--builtin', 'braid:3'],
    ['nbc', '--builtin', 'braid:3', '--order', '0,1,2'],
])
def test_usage_errors(runner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == 2


def test_failed_verification(runner, monkeypatch):
    failing = GradedReport(checks=[Check(0, 'series', None, 1, 2, False)])
    monkeypatch.setattr(Oracle, 'verify_all', lambda self, p: failing)
    result = runner.invoke(main, ['verify', '--builtin', 'braid:3'])
    assert result.exit_code == 1
    assert result.output.endswith(
        'FAILED: degree 0 series: expected 1, got 2\n')


def test_input_file_not_utf8(runner, tmp_path):
    path = tmp_path / 'latin1.txt'
    path.write_bytes(b"2\n1 0\n\xff\xfe 1\n")
    result = runner.invoke(main, ['poincare', str(path)])
    assert result.exit_code == 2
    assert 'line 3: not valid UTF-8' in result.output
