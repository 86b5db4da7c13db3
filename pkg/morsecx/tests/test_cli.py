import json
import pytest

from ..cli import run, CliConfig, get_parser


def test_cli_gen(capsys):
    assert run(['gen', 'cycle', '4']) == 0
    out = capsys.readouterr().out
    assert out == 'v0 v1\nv0 v3\nv1 v2\nv2 v3\n'


def test_cli_gen_json(capsys):
    assert run(['gen', 'kite', '--format', 'json']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['vertices'] == ['a', 'b', 'c', 'd']
    assert data['f_vector'] == [4, 4]


def test_cli_gen_missing_size(capsys):
    assert run(['gen', 'cycle']) == 1
    assert 'needs a size' in capsys.readouterr().err


def test_cli_build_morse(capsys, tmp_path):
    assert run(['build-morse', '--gen', 'cycle', '3']) == 0
    assert capsys.readouterr().out == 'f-vector: (6, 9)\n'

    output = tmp_path / 'morse.json'
    assert run(['build-morse', '--gen', 'path', '3', '-o', str(output)]) == 0
    assert capsys.readouterr().out == 'f-vector: (4, 3)\n'

    data = json.loads(output.read_text())
    assert data['partial'] is False
    assert data['f_vector'] == [4, 3]
    assert 'a|ab' not in data['vertices']
    assert 'v0|v0,v1' in data['vertices']


def test_cli_build_morse_budget(capsys, tmp_path):
    output = tmp_path / 'partial.json'
    code = run([
        'build-morse', '--gen', 'cycle', '3', '--budget', '2',
        '-o', str(output),
    ])
    assert code == 1
    assert 'error' in capsys.readouterr().err

    data = json.loads(output.read_text())
    assert data['partial'] is True
    assert data['budget'] == 2


def test_cli_aut(capsys):
    assert run(['aut', '--gen', 'cycle', '3', '--of', 'complex']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'order: 6'
    assert lines[1] == 'generators:'

    assert run(['aut', '--gen', 'cycle', '3', '--of', 'hasse']) == 0
    assert capsys.readouterr().out.splitlines()[0] == 'order: 12'

    assert run(['aut', '--gen', 'cycle', '3', '--of', 'morse']) == 0
    assert capsys.readouterr().out.splitlines()[0] == 'order: 12'


def test_cli_aut_via_hasse(capsys):
    code = run([
        'aut', '--gen', 'boundary', '3', '--of', 'morse', '--via-hasse',
        '--format', 'json',
    ])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data['order'] == 48
    assert data['via_hasse'] is True
    assert data['of'] == 'morse'


def test_cli_aut_morse_over_budget(capsys):
    code = run([
        'aut', '--gen', 'cycle', '4', '--of', 'morse', '--budget', '5',
    ])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'order: 16'
    assert lines[1] == 'via hasse: true'


def test_cli_verify(capsys):
    assert run(['verify', '--gen', 'path', '3']) == 0
    out = capsys.readouterr().out
    assert 'orders (complex, hasse, morse): (2, 2, 2)' in out
    assert out.splitlines()[-1] == 'overall: pass'


def test_cli_verify_json(capsys):
    code = run([
        'verify', '--gen', 'cycle', '3', '--format', 'json', '--timings',
        '--nworkers', '2', '--oracle-sweep', '20', '--seed', '5',
    ])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data['overall'] is True
    assert data['classification'] == 'Both(3, 2)'
    assert all('elapsed_ms' in check for check in data['checks'])
    assert data['checks'][-1]['name'] == 'oracle-sweep'


def test_cli_verify_group_budget(capsys):
    code = run(['verify', '--gen', 'cycle', '3', '--group-budget', '1'])
    assert code == 1
    assert 'overall: FAIL' in capsys.readouterr().out


def test_cli_file_input(capsys, tmp_path):
    path = tmp_path / 'kite.txt'
    path.write_text('# kite\na b\nb c\nc a\nc d\n')

    assert run(['verify', str(path)]) == 0
    assert 'classification: Other' in capsys.readouterr().out

    jpath = tmp_path / 'kite.json'
    assert run(['export-json', str(path), '-o', str(jpath)]) == 0
    capsys.readouterr()

    assert run(['export-json', str(jpath)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['f_vector'] == [4, 4]


def test_cli_export_dot(capsys):
    assert run(['export-dot', '--gen', 'cycle', '3']) == 0
    out = capsys.readouterr().out
    assert out.startswith('graph hasse {\n')
    assert out.count(' -- ') == 6


def test_cli_export_json_morse(capsys):
    assert run(['export-json', '--gen', 'cycle', '3', '--of', 'morse']) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data['vertices']) == 6
    assert data['f_vector'] == [6, 9]


def test_cli_export_json_morse_budget(capsys, tmp_path):
    argv = [
        'export-json', '--gen', 'cycle', '3', '--of', 'morse', '--budget', '2',
    ]
    assert run(argv) == 1
    captured = capsys.readouterr()
    assert 'error' in captured.err

    data = json.loads(captured.out)
    assert data['partial'] is True
    assert data['budget'] == 2
    assert data['count'] == 2

    output = tmp_path / 'partial.json'
    assert run(argv + ['-o', str(output)]) == 1
    assert capsys.readouterr().out == ''
    assert json.loads(output.read_text()) == data


@pytest.mark.parametrize('argv', [
    ['gen', 'moebius'],
    ['gen', 'boundary', '3', '--format', 'json'],
    ['build-morse', '--gen', 'kite', '--format', 'json'],
    ['aut', '--gen', 'boundary', '3', '--of', 'complex'],
    ['aut', '--gen', 'cycle', '5', '--of', 'morse', '--format', 'json'],
    ['aut', '--gen', 'kite', '--of', 'hasse'],
    ['verify', '--gen', 'cycle', '4', '--format', 'json'],
    ['verify', '--gen', 'boundary', '3', '--nworkers', '2'],
    ['verify', '--gen', 'path', '3', '--oracle-sweep', '50', '--seed', '3'],
    ['export-dot', '--gen', 'star', '3'],
    ['export-json', '--gen', 'cycle', '4', '--of', 'morse'],
])
def test_cli_deterministic(argv, capsys):
    code = run(argv)
    first = capsys.readouterr().out
    assert first != ''

    assert run(argv) == code
    assert capsys.readouterr().out == first


@pytest.mark.parametrize('argv', [
    [],
    ['bogus'],
    ['verify'],
    ['verify', 'kite.txt', '--gen', 'kite'],
    ['verify', '--gen', 'torus'],
    ['verify', '--gen', 'cycle', 'x'],
    ['verify', '--gen', 'cycle', '2'],
    ['verify', '--gen', 'kite', '--budget', '0'],
    ['verify', '--gen', 'kite', '--nworkers', '0'],
    ['verify', '/nonexistent/path/to/facets.txt'],
])
def test_cli_errors(argv, capsys):
    assert run(argv) == 1
    assert capsys.readouterr().err != ''


def test_cli_help(capsys):
    assert run(['--help']) == 0
    assert 'morsecx' in capsys.readouterr().out


def test_cli_bad_facets(capsys, tmp_path):
    path = tmp_path / 'bad.txt'
    path.write_text('a b\nb>c\n')
    assert run(['verify', str(path)]) == 1
    assert 'line 2' in capsys.readouterr().err


def test_cli_config_validate():
    with pytest.raises(ValueError):
        CliConfig(command='verify')

    with pytest.raises(ValueError):
        CliConfig(command='gen', input='kite.txt')

    with pytest.raises(ValueError):
        CliConfig(command='verify', generator=('kite', None), budget=-1)

    cfg = CliConfig(command='verify', generator=('cycle', 4))
    assert cfg.fmt == 'table'
    assert cfg.nworkers == 1


def test_cli_parser():
    args = get_parser().parse_args(
        ['-vv', 'aut', 'k.txt', '--of', 'hasse', '--group-budget', '100'],
    )
    assert args.verbose == 2
    assert args.command == 'aut'
    assert args.file == 'k.txt'
    assert args.of == 'hasse'
    assert args.group_budget == 100
