#!/usr/bin/env python
# -*- coding: utf-8 -*-
import json
import logging

import pytest

from cfrac.cli.bench import HEADER
from cfrac.cli.bench import run_bench
from cfrac.cli.codec import ExpansionReport
from cfrac.cli.codec import decode_cfraction
from cfrac.cli.codec import encode_cfraction
from cfrac.cli.codec import load_series
from cfrac.cli.codec import parse_domain
from cfrac.cli.command import normalize_argv
from cfrac.cli.command import parse_list
from cfrac.cli.sources import weight_values
from cfrac.coeffs import RATIONALS
from cfrac.coeffs import PolynomialRing
from cfrac.coeffs import RationalFunctionField
from cfrac.exception import ArgumentError
from cfrac.expand import ExpansionShape
from cfrac.expand import expand

from .conftest import factorials


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding='utf-8')
    return str(path)


# expand

def test_expand_text(cli):
    r = cli('expand', '--family', 'factorial', '--order', '8', '--shape', 's', '--output', 'text')
    assert r.code == 0
    lines = r.out.splitlines()
    assert lines[0] == '1;1,1,2,2,3,3,4,4'
    assert lines[1] == 'kind=inconclusive remaining=0'


def test_expand_symbolic_json(cli):
    r = cli('expand', '--family', 'bell', '--params', 'x=sym,y=sym', '--order', '6', '--shape', 's')
    assert r.code == 0
    doc = r.json
    assert doc['schema'] == 'cfrac/1'
    assert doc['determined_order'] == 6
    cf = ExpansionReport.from_dict(doc).cf
    R = PolynomialRing('x', 'y')
    x, y = R.gen('x'), R.gen('y')
    assert cf.domain == R
    assert cf.alphas == [x, y, x, 2 * y, x, 3 * y]


def test_expand_input_document(cli, tmp_path):
    path = write_json(tmp_path, 'coeffs.json', {'coeffs': ['1', '1', '2', '6', '24', '120'], 'order': 5})
    r = cli('expand', '--input', path, '--order', '4', '--shape', 'j')
    assert r.code == 0
    doc = r.json
    assert doc['terms'] == [{'delta': ['1'], 'alpha': '1', 'p': 2},
                            {'delta': ['3'], 'alpha': '4', 'p': 2}]
    assert doc['status'] == {'kind': 'inconclusive', 'remaining': 0}
    assert doc['order'] == 4
    assert doc['shape']['name'] == 'j'


def test_expand_terminating_input(cli, tmp_path):
    path = write_json(tmp_path, 'geometric.json', [1, 1, 1, 1, 1, 1])
    r = cli('expand', '--input', path, '--algorithm', 'primitive')
    assert r.code == 0
    assert r.json['status'] == {'kind': 'terminated', 'k': 1, 'witness': 4}
    assert r.json['determined_order'] is None
    assert r.json['algorithm'] == 'primitive'


def test_expand_with_g_minus_one(cli, tmp_path):
    f = write_json(tmp_path, 'f.json', [1, 1, 2, 3, 5, 8, 13, 21, 34])
    g = write_json(tmp_path, 'g.json', {'coeffs': ['1', '-1', '-1']})
    r = cli('expand', '--input', f, '--g-minus-one', g, '--output', 'text')
    assert r.code == 0
    assert r.out.splitlines()[0] == '1;1,1,-1'


def test_same_input_same_digest(cli):
    first = cli('expand', '--family', 'catalan', '--order', '5').json
    second = cli('expand', '--family', 'catalan', '--order', '5', '--algorithm', 'primitive').json
    assert first['digest'] == second['digest']
    assert first['terms'] == second['terms']


# verify

def test_verify_euler_gauss_closed_form(cli):
    r = cli('verify', '--check', 'euler-gauss', '--family', 'rr', '--order', '8')
    assert r.code == 0
    check = r.json['checks'][0]
    assert check['ok'] and check['source'] == 'closed form'
    assert check['family'] == 'rr_ratio'
    assert check['levels'] == 6


def test_verify_euler_gauss_from_the_g_table(cli):
    r = cli('verify', '--check', 'euler-gauss', '--family', 'tan', '--order', '10', '--shape', 's')
    assert r.code == 0
    assert r.json['checks'][0]['source'] == 'g-table'


def test_verify_hankel(cli):
    r = cli('verify', '--check', 'hankel', '--family', 'factorial', '--size', '6')
    assert r.code == 0
    identities = [c['identity'] for c in r.json['checks'][0]['checks']]
    assert identities == ['H0 = S D S^T', "H1 = S' D' S'^T"]


def test_verify_hankel_interleaved(cli):
    r = cli('verify', '--check', 'hankel', '--family', 'secant_power', '--size', '4', '--interleave')
    assert r.code == 0
    assert r.json['checks'][0]['checks'][0]['identity'] == 'H0 = J D J^T'


def test_verify_flajolet_with_finite_weights(cli):
    r = cli('verify', '--check', 'flajolet', '--betas', '1,1,1', '--gammas', '1,1,1', '--order', '8')
    assert r.code == 0
    check = r.json['checks'][0]
    assert check['ok'] and check['enumerated']
    assert check['products_checked'] == [1, 2, 3]


def test_verify_several_checks(cli):
    r = cli('verify', '--check', 'roundtrip,gtable', '--family', 'factorial', '--order', '6', '--shape', 's')
    assert r.code == 0
    assert [c['check'] for c in r.json['checks']] == ['roundtrip', 'gtable']
    roundtrip = r.json['checks'][0]
    assert roundtrip['algorithms_agree'] and roundtrip['series'] and roundtrip['json']


def test_verify_failure_exits_3(cli):
    r = cli('verify', '--check', 'hankel', '--family', 'factorial', '--size', '3', '--alphas', '1,1,2,2,3,4..')
    assert r.code == 3
    assert r.json['ok'] is False


def test_verify_needs_a_check(cli):
    assert cli('verify', '--family', 'factorial').code == 1
    assert cli('verify', '--check', 'nothing', '--family', 'factorial').code == 1


# table

def test_table_s(cli):
    r = cli('table', '--kind', 'S', '--alphas', '1,1,2,2,3,3,4,4,5,5,6,6', '--size', '6')
    assert r.code == 0
    rows = r.json['rows']
    assert rows[4][2] == '72'
    assert rows[6][0] == '720'


def test_table_sprime(cli):
    r = cli('table', '--kind', 'Sprime', '--alphas', '1,1,2,2,3,3,4,4,5,5,6,6', '--size', '6')
    assert r.json['rows'][6] == ['5040', '15120', '12600', '4200', '630', '42', '1']


def test_table_j(cli):
    r = cli('table', '--kind', 'J', '--betas', '1..', '--gammas', '1..', '--size', '6')
    assert r.code == 0
    assert [row[0] for row in r.json['rows']] == ['1', '1', '2', '4', '9', '21', '51']
    assert r.json['domain'] == RATIONALS.descriptor


def test_table_symbolic(cli):
    r = cli('table', '--kind', 'J', '--symbolic', '--size', '2')
    assert r.code == 0
    assert r.json['domain']['kind'] == PolynomialRing('b1').descriptor['kind']


def test_table_needs_matching_weights(cli):
    assert cli('table', '--kind', 'J', '--alphas', '1..').code == 1
    assert cli('table', '--kind', 'S', '--betas', '1..', '--gammas', '1..').code == 1
    assert cli('table', '--kind', 'T', '--alphas', '1..').code == 1


# moments

def test_moments(cli):
    r = cli('moments', '--params', 'eps=1', '--budget', '10')
    assert r.code == 0
    assert r.json['budget'] == 10
    result = r.json['result']
    assert result['found'] is True and result['n'] == 6


def test_moments_without_negative_alpha(cli, tmp_path):
    path = write_json(tmp_path, 'm.json', {'coeffs': [1, 1, 2, 6, 24, 120]})
    r = cli('moments', '--input', path)
    assert r.code == 0
    assert r.json['result'] == {'found': False, 'checked': 5,
                                'status': {'kind': 'inconclusive', 'remaining': 0}}


# catalog

def test_catalog_list(cli):
    r = cli('catalog', 'list')
    assert r.code == 0
    entries = {e['name']: e for e in r.json['families']}
    assert entries['factorial']['gk'] is True
    assert entries['tan_ratio']['gk'] is False
    assert entries['tan_ratio']['variable'] == 'u'


def test_catalog_generate(cli):
    r = cli('catalog', 'generate', '--family', 'rr', '--order', '3')
    assert r.code == 0
    doc = r.json
    assert doc['family'] == 'rr_ratio'
    assert len(doc['coeffs']) == 4 and doc['coeffs'][0] == '1'
    assert doc['path_mode'] == 'dyck'
    f, _ = load_series(doc)
    assert f.domain == RationalFunctionField('q')


def test_catalog_errors(cli):
    assert cli('catalog', 'generate', '--order', '3').code == 1
    assert cli('catalog', 'drop').code == 1


# bench

def test_bench_csv(cli, tmp_path):
    plot = tmp_path / 'factorial.dat'
    r = cli('bench', '--family', 'factorial', '--Ns', '5,10', '--repeats', '1', '--warmup', '0',
            '--emit-plot', str(plot))
    assert r.code == 0
    lines = r.out.splitlines()
    assert lines[0] == ','.join(HEADER)
    assert len(lines) == 5
    assert {line.split(',')[0] for line in lines[1:]} == {'refined', 'primitive'}
    assert plot.read_text(encoding='utf-8').startswith('# refined\n')


def test_bench_rejects_unknown_algorithms(cli):
    assert cli('bench', '--Ns', '5', '--algorithms', 'fast').code == 1
    assert cli('bench').code == 1


def test_bench_both_algorithms(cli):
    r = cli('bench', '--algorithms=both', '--Ns', '4,6', '--repeats', '1', '--warmup', '0')
    assert r.code == 0
    rows = [line.split(',') for line in r.out.splitlines()[1:]]
    assert sorted((row[0], row[2]) for row in rows) == [
        ('primitive', '4'), ('primitive', '6'), ('refined', '4'), ('refined', '6')]
    assert cli('bench', '--algorithms', 'refined', '--Ns', '4', '--repeats', '1', '--warmup', '0').out.count('\n') == 2


def test_explicit_logging_level_wins(cli):
    info = logging.getLogger('cfrac.info.log')
    assert cli('catalog', 'list', '--logging', 'debug').code == 0
    assert info.level == logging.DEBUG
    assert cli('catalog', 'list', '--logging', 'error').code == 0
    assert info.level == logging.ERROR
    assert cli('catalog', 'list').code == 0
    assert info.level == logging.WARNING


def _speedup(name, params, N):
    records = {r.algorithm: r.ms for r in run_bench(name, params, [N], repeats=3, warmup=1)}
    return records['primitive'] / records['refined']


@pytest.mark.slow
def test_refined_is_faster_on_factorials():
    assert _speedup('factorial', {}, 500) >= 3


@pytest.mark.slow
def test_refined_is_faster_on_symbolic_rising_factorials():
    assert _speedup('rising_factorial', {'a': 'sym'}, 30) >= 1.5


# exit codes and errors

def test_usage_and_unknown_commands(cli):
    assert cli().code == 1
    assert cli('--help').code == 0
    r = cli('transmogrify')
    assert r.code == 1 and 'unknown command' in r.err


def test_malformed_input(cli, tmp_path):
    assert cli('expand').code == 1
    assert cli('expand', '--family', 'nope', '--order', '3').code == 1
    assert cli('expand', '--family', 'factorial', '--order', 'x').code == 1
    assert cli('expand', '--family', 'factorial', '--unknown-flag', '1').code == 1
    assert cli('expand', '--family', 'bell', '--params', 'z=1', '--order', '3').code == 1
    assert cli('expand', '--input', str(tmp_path / 'missing.json')).code == 1
    bad = write_json(tmp_path, 'floats.json', [1.0, 0.5])
    assert cli('expand', '--input', bad).code == 1


def test_expansion_error_prints_json(cli, tmp_path):
    path = write_json(tmp_path, 'gap.json', [1, 0, 1, 0, 0])
    r = cli('expand', '--input', path, '--shape', 's')
    assert r.code == 2
    error = r.json['error']
    assert error['error'] == 'StrictShapeViolation'
    assert error['code'] == 'strict_shape_violation'
    assert error['data']['partial']['terms'] == []


def test_non_unit_constant_term(cli, tmp_path):
    doc = {'domain': PolynomialRing('x').descriptor, 'coeffs': ['x', '1']}
    r = cli('expand', '--input', write_json(tmp_path, 'x.json', doc))
    assert r.code == 2
    assert r.json['error']['code'] == 'non_unit_constant_term'


# codec and parsing helpers

def test_report_roundtrip():
    cf = expand(factorials(6), ExpansionShape.jfraction())
    report = ExpansionReport(cf, 'abc', 1.5, 'refined', ExpansionShape.jfraction(), 6)
    back = ExpansionReport.from_dict(json.loads(json.dumps(report.as_dict())))
    assert back.cf == cf
    assert back.shape == ExpansionShape.jfraction()
    assert decode_cfraction(encode_cfraction(cf)) == cf
    with pytest.raises(ArgumentError):
        ExpansionReport.from_dict({'schema': 'other/2'})


def test_parse_domain():
    assert parse_domain('QQ') == RATIONALS
    assert parse_domain('QQ[x, y]') == PolynomialRing('x', 'y')
    assert parse_domain('QQ(q)') == RationalFunctionField('q')
    with pytest.raises(ArgumentError):
        parse_domain('ZZ')


def test_normalize_argv():
    opts, positional = normalize_argv(['generate', '--order', '8', '--interleave', '--shape=s', '--', '--x'],
                                      {'interleave'})
    assert opts == ['--order=8', '--interleave', '--shape=s']
    assert positional == ['generate', '--x']


def test_parse_list():
    assert parse_list('1,2..') == (['1', '2'], True)
    assert parse_list(['1', '..']) == (['1'], True)
    assert parse_list(['3']) == (['3'], False)
    with pytest.raises(ArgumentError):
        parse_list('..')
    with pytest.raises(ArgumentError):
        parse_list('1..,2')


def test_weight_values():
    finite = weight_values(RATIONALS, ['1', '2'], 1)
    assert [finite(i) for i in range(1, 5)] == [1, 2, 0, 0]
    repeated = weight_values(RATIONALS, ['1', '2..'], 0)
    assert [repeated(i) for i in range(4)] == [1, 2, 2, 2]
    rises = weight_values(RATIONALS, ['3'], 0, pad=RATIONALS.one)
    assert [rises(i) for i in range(3)] == [3, 1, 1]
