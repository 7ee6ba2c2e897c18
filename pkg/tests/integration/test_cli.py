"""Integration tests for the knotgroups command line."""
import json

import pytest

from knotgroups.app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run


@pytest.fixture
def cli(sample_config, capsys):
    """Run the CLI against the sample configuration; returns (code, stdout)."""
    def invoke(*argv, json_output=False):
        prefix = ['--config', sample_config] + (['--json'] if json_output else [])
        code = run(prefix + list(argv))
        return code, capsys.readouterr().out
    return invoke


def test_annihilator(cli):
    code, out = cli('annihilator', '--fixture', 'trefoil-g2')
    assert code == EXIT_OK
    assert out.strip() == "2*(1+y)"


def test_lcs_layer(cli):
    code, out = cli('lcs', '--fixture', 'trefoil-g2', '--class', '2')
    assert code == EXIT_OK
    assert out.strip() == "Z/4"


def test_lcs_printed_relations(cli):
    code, out = cli('lcs', '--fixture', 'trefoil-g2', '--class', '3', '--printed-relations')
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "Z/4 x Z/4"
    assert all(line.endswith('holds') for line in lines[1:])


def test_lcs_json(cli):
    code, out = cli('lcs', '--fixture', 'trefoil-g1(2)', '--class', '4', json_output=True)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data['k'] == 4
    assert data['structure'] == "Z^2 x Z/2"
    assert data['torsion'] == [2]


def test_fox(cli):
    code, out = cli('fox', '--word', 'x*y*x^-1', '--vars', 'x,y')
    assert code == EXIT_OK
    assert out.strip().splitlines() == ["d/dx: 1-y", "d/dy: x"]


def test_abelianize_json(cli):
    code, out = cli('abelianize', '--fixture', 'trefoil-g3', json_output=True)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data == {'rank': 2, 'torsion': [], 'structure': "Z^2"}


def test_present_braid(cli):
    code, out = cli('present', '--braid', 's1 s1 v1', '--strands', '2', json_output=True)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data['generators'] == ['y', 'x1', 'x2']
    assert len(data['relators']) == 2


def test_present_inline_json(cli):
    code, out = cli('present', '--presentation', '{"generators": ["x", "y"], "relators": ["x*y = y*x"]}')
    assert code == EXIT_OK
    assert out.strip() == "< x, y | x*y = y*x >"


def test_fixture_command(cli):
    code, out = cli('fixture', 'trefoil-g1(2)')
    assert code == EXIT_OK
    assert "x^-2*y^-1*x*y*x^2 = y^-2*x^2*y*x*y^-1*x^-2*y^2" in out


def test_kishino(cli):
    code, out = cli('kishino')
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert "verdict: NOT-UNIMODULAR" in lines
    assert lines[-1] == "G3(Kishino) is not free of rank 2"


def test_kishino_json(cli):
    code, out = cli('kishino', json_output=True)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data['verified']
    assert [f['fate'] for f in data['fates']] == ['consequence', 'trivial', 'defining relation']
    assert data['certificate']['foxConvention'] == 'left'


def test_algebra_basis(cli):
    code, out = cli('algebra', '--ideal', 'XX,YY,XYXY,YXYX')
    assert code == EXIT_OK
    assert out.splitlines()[0] == "Q<X,Y>/(XX,YY,XYXY,YXYX): dimension 7"


def test_algebra_check_relation(cli):
    code, _ = cli('algebra', '--check-relation', '--fixture', 'trefoil-g2')
    assert code == EXIT_FAILED
    code, out = cli('algebra', '--commutative', '--check-relation', '--fixture', 'trefoil-g2')
    assert code == EXIT_OK
    assert 'relation holds' in out


def test_algebra_check_relation_needs_input(cli):
    code, _ = cli('algebra', '--check-relation')
    assert code == EXIT_USAGE


def test_rewrite_check(cli):
    code, out = cli('rewrite-check', '--family', 'trefoil-g2')
    assert code == EXIT_OK
    assert out.strip().endswith('matches')
    code, out = cli('rewrite-check', '--family', 'trefoil-g1', '--r', '2', '--printed')
    assert code == EXIT_FAILED
    assert out.strip().endswith('does not match')


def test_selftest(cli):
    code, out = cli('selftest', '--check', 'free inverse', '--iterations', '3', json_output=True)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data['passed']
    assert data['seed'] == 7
    assert data['results'][0]['trials'] == 3


def test_seed_flag_overrides_config(cli):
    code, out = cli('--seed', '11', 'selftest', '--check', 'free inverse', '--iterations', '1', json_output=True)
    assert code == EXIT_OK
    assert json.loads(out)['seed'] == 11


def test_usage_errors(cli):
    assert cli()[0] == EXIT_USAGE
    assert cli('lcs', '--fixture', 'trefoil-g2')[0] == EXIT_USAGE
    assert cli('abelianize', '--fixture', 'trefoil-g9')[0] == EXIT_USAGE
    assert cli('present', '--braid', 's1', )[0] == EXIT_USAGE
    assert cli('annihilator', '--fixture', 'trefoil-g2', '--index', '3')[0] == EXIT_USAGE


def test_lcs_out_of_range(cli):
    code, _ = cli('lcs', '--fixture', 'trefoil-g2', '--class', '6')
    assert code == EXIT_USAGE


def test_missing_config_file(temp_dir, capsys):
    code = run(['--config', f"{temp_dir}/missing.yaml", 'kishino'])
    assert code == EXIT_USAGE
    assert 'configuration' in capsys.readouterr().err
