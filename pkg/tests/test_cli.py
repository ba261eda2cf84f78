import json

import pytest

import poset_realizer.posets as posets
from poset_realizer.cli import RunConfig, build_parser, main
from poset_realizer.core import ConfigurationError
from poset_realizer.posets import poset_to_dict, write_json

from .conf import path3, triangle


def run_cli(capsys, *argv):
    status = main(list(argv))
    return status, json.loads(capsys.readouterr().out)


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / 'triangle.json'
    write_json(triangle, path)
    return str(path)


class TestConstruct:

    def test_main(self, capsys):
        status, output = run_cli(capsys, 'construct', '--method', 'main', '--group', 'C2^3', '--gens', 'e1,e2,e3')
        assert status == 0
        assert output['verdict'] is True
        assert output['poset_points'] == 32
        assert output['aut_order'] == 8
        assert output['adjacency_audit']['passed']
        assert 'action' not in output

    def test_outputs(self, capsys, tmp_path):
        files = {flag: str(tmp_path / name) for flag, name in [
            ('--out', 'poset.json'), ('--action-out', 'action.json'), ('--certificate-out', 'certificate.json'),
            ('--dot', 'poset.dot'),
        ]}
        argv = ['construct', '--method', 'subdivided-crown', '--n', '4']
        for flag, path in files.items():
            argv += [flag, path]
        status, _ = run_cli(capsys, *argv)
        assert status == 0
        with open(files['--out']) as f:
            assert len(json.load(f)['points']) == 12
        with open(files['--action-out']) as f:
            assert len(json.load(f)['action']) == 4
        with open(files['--dot']) as f:
            assert f.read().startswith('digraph')

        status, output = run_cli(capsys, 'verify', '--certificate', files['--certificate-out'])
        assert status == 0
        assert output['agrees']
        assert output['aut_order'] == 4

    def test_tampered_certificate(self, capsys, tmp_path):
        path = str(tmp_path / 'certificate.json')
        run_cli(capsys, 'construct', '--method', 'crown', '--n', '3', '--certificate-out', path)
        with open(path) as f:
            data = json.load(f)
        data['aut_order'] = 12
        write_json(data, path)
        status, output = run_cli(capsys, 'verify', '--certificate', path)
        assert status == 1
        assert not output['agrees']

    def test_cyclic_prime_power(self, capsys):
        status, output = run_cli(capsys, 'construct', '--method', 'cyclic-pk', '--p', '3', '--k', '2')
        assert status == 0
        assert output['poset_points'] == 27
        assert output['params']['regime'] == 'subdivided-crown'

    def test_unverified_regime_warns(self, capsys):
        with pytest.warns(Warning):
            status, output = run_cli(
                capsys, 'construct', '--method', 'cyclic-pk', '--p', '7', '--k', '1', '--unverified', '--no-verify'
            )
        assert status == 1
        assert output['verdict'] is False
        assert output['verified'] is False
        assert output['aut_order'] is None
        assert output['params']['unverified'] is True

    def test_skipped_verification_is_not_a_success(self, capsys):
        with pytest.warns(Warning):
            status, output = run_cli(capsys, 'construct', '--method', 'crown', '--n', '3', '--no-verify')
        assert status == 1
        assert output['verdict'] is False
        assert output['homomorphism'] and output['injective']

    def test_unverified_regime_verified(self, capsys):
        with pytest.warns(Warning):
            status, output = run_cli(
                capsys, 'construct', '--method', 'cyclic-pk', '--p', '7', '--k', '1', '--unverified'
            )
        assert output['verified'] is True
        assert output['aut_order'] is not None
        assert status == (0 if output['aut_order'] == 7 else 1)

    def test_abelian_join(self, capsys):
        status, output = run_cli(capsys, 'construct', '--method', 'abelian-join', '--parts', '2,3')
        assert status == 0
        assert output['group_order'] == 6

    def test_graph_lattice(self, capsys, graph_file):
        status, output = run_cli(capsys, 'construct', '--method', 'graph-lattice', '--graph', graph_file)
        assert status == 0
        assert output['poset_points'] == 8
        assert output['aut_order'] == 6

    @pytest.mark.parametrize('argv', [
        ['--method', 'crown', '--group', 'C3'],
        ['--method', 'crown', '--p', '3'],
        ['--method', 'main'],
        ['--method', 'main', '--group', 'C2^3', '--n', '3'],
        ['--method', 'cyclic-pk', '--p', '3'],
        ['--method', 'abelian-join'],
        ['--method', 'abelian-join', '--parts', '2,x'],
        ['--method', 'graph-lattice'],
        ['--method', 'unknown'],
        ['--method', 'crown', '--workers', '0'],
    ])
    def test_configuration_errors(self, capsys, argv):
        status, output = run_cli(capsys, 'construct', *argv)
        assert status == 2
        assert output['error'] == 'ConfigurationError'

    def test_construction_error(self, capsys):
        status, output = run_cli(capsys, 'construct', '--method', 'main', '--group', 'C4')
        assert status == 2
        assert output['error'] == 'ConstructionError'

    def test_group_spec_error(self, capsys):
        status, output = run_cli(capsys, 'construct', '--method', 'main', '--group', 'X9')
        assert status == 2
        assert output['error'] == 'GroupSpecError'


class TestAut:

    @pytest.fixture
    def poset_file(self, tmp_path):
        def write(poset):
            path = tmp_path / 'poset.json'
            write_json(poset_to_dict(poset), path)
            return str(path)
        return write

    def test_chain(self, capsys, poset_file):
        status, output = run_cli(capsys, 'aut', '--poset', poset_file(posets.chain(5)))
        assert status == 0
        assert output['order'] == 1
        assert output['generators'] == []

    def test_fix(self, capsys, poset_file):
        path = poset_file(posets.antichain(3))
        assert run_cli(capsys, 'aut', '--poset', path)[1]['order'] == 6
        assert run_cli(capsys, 'aut', '--poset', path, '--fix', '0')[1]['order'] == 2

    def test_unknown_point(self, capsys, poset_file):
        status, output = run_cli(capsys, 'aut', '--poset', poset_file(posets.chain(2)), '--fix', 'x')
        assert status == 2
        assert output['error'] == 'UnknownPointError'

    def test_cycle(self, capsys, tmp_path):
        path = tmp_path / 'cycle.json'
        write_json(dict(points=['a', 'b'], covers=[[0, 1], [1, 0]]), path)
        status, output = run_cli(capsys, 'aut', '--poset', str(path))
        assert status == 2
        assert output['error'] == 'CycleError'

    def test_malformed_cover(self, capsys, tmp_path):
        path = tmp_path / 'malformed.json'
        write_json(dict(points=['a', 'b'], covers=[[0]]), path)
        status, output = run_cli(capsys, 'aut', '--poset', str(path))
        assert status == 2
        assert output['error'] == 'ValueError'
        assert '[0]' in output['message']

    def test_missing_file(self, capsys, tmp_path):
        status, output = run_cli(capsys, 'aut', '--poset', str(tmp_path / 'missing.json'))
        assert status == 2
        assert output['error'] == 'FileNotFoundError'


def test_beta(capsys, tmp_path):
    out = str(tmp_path / 'beta.json')
    status, output = run_cli(capsys, 'beta', '--group', 'C2', '--max-points', '3', '--out', out)
    assert status == 0
    assert output['beta'] == 2
    with open(out) as f:
        assert json.load(f) == output


def test_beta_cap(capsys):
    status, output = run_cli(capsys, 'beta', '--group', 'C2', '--max-points', '12')
    assert status == 2
    assert output['error'] == 'CapExceededError'


@pytest.mark.parametrize(['graph', 'bounded', 'points'], [[triangle, False, 6], [triangle, True, 8], [path3, True, 7]])
def test_face_poset(capsys, tmp_path, graph, bounded, points):
    path = tmp_path / 'graph.json'
    write_json(graph, path)
    argv = ['face-poset', '--graph', str(path)] + (['--bounded'] if bounded else [])
    status, output = run_cli(capsys, *argv)
    assert status == 0
    assert len(output['points']) == points


def test_bounds(capsys):
    status, output = run_cli(capsys, 'bounds')
    assert status == 0
    assert output['groups'][0]['group'] == 'C2'
    assert output['sources']


def test_crosscheck(capsys):
    status, output = run_cli(capsys, 'crosscheck', '--count', '25', '--max-points', '6', '--seed', '3')
    assert status == 0
    assert output['count'] == 25
    assert output['seed'] == 3
    assert output['mismatches'] == []


def test_verbosity_flags_conflict():
    with pytest.raises(SystemExit):
        build_parser().parse_args(['bounds', '-v', '-q'])


def test_run_config_validation():
    with pytest.raises(ConfigurationError):
        RunConfig('beta', group='C2').validate()
    with pytest.raises(ConfigurationError):
        RunConfig('unknown').validate()
    RunConfig('beta', group='C2', max_points=3).validate()
