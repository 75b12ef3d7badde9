#!/usr/bin/env python
# -*- coding: utf-8 -*-
from math import comb
from math import factorial

import pytest

from cfrac.catalog import GK_FAMILIES
from cfrac.catalog import SeriesSpec
from cfrac.catalog import dumont_kreweras_oracle
from cfrac.catalog import families
from cfrac.catalog import generate
from cfrac.catalog import get_family
from cfrac.catalog import gk_family
from cfrac.catalog import parse_params
from cfrac.catalog import qbinomial
from cfrac.catalog import qbinomial_by_ratio
from cfrac.catalog import qbinomial_mismatches
from cfrac.catalog import qpochhammer
from cfrac.catalog import stirling2
from cfrac.catalog.combinat import DK_RING
from cfrac.catalog.qseries import Q_RING
from cfrac.coeffs import RATIONALS
from cfrac.coeffs import PolynomialRing
from cfrac.coeffs import RationalFunctionField
from cfrac.exception import ArgumentError
from cfrac.exception import BadParams
from cfrac.exception import IndexOutOfRange
from cfrac.exception import SizeLimit
from cfrac.exception import UnknownFamily
from cfrac.expand import ExpansionShape
from cfrac.expand import as_jfraction
from cfrac.expand import expand

from .conftest import factorials
from .conftest import make_series


def spec(name, order, **params):
    return SeriesSpec(name, params, order)


# generators

def test_generated_coefficients():
    assert generate(spec('bell', 5, x='1', y='1')) == make_series([1, 1, 2, 5, 15, 52])
    assert generate(spec('tan', 3)) == make_series([1, '1/3', '2/15', '17/315'])
    assert generate(spec('secant_power', 4, x='1')) == make_series([1, 1, 5, 61, 1385])
    assert generate(spec('odd_double_factorial', 4)) == make_series([1, 1, 3, 15, 105])
    assert generate(spec('moment_probe', 6, eps='0')) == factorials(6)
    assert generate(spec('motzkin', 6)) == make_series([1, 1, 2, 4, 9, 21, 51])


def test_symbolic_rising_factorial():
    f = generate(spec('rising_factorial', 3))
    R = f.domain
    a = R.gen('a')
    assert R == PolynomialRing('a')
    assert list(f.coeffs) == [R.one, a, a * (a + 1), a * (a + 1) * (a + 2)]


def test_moment_probe_closed_form():
    f = generate(spec('moment_probe', 5, eps='1/2'))
    for n in range(6):
        expected = RATIONALS.convert('3/2') * factorial(n) - RATIONALS.convert(f'1/{2 * (n + 1) ** 2}')
        assert f[n] == expected


def test_domains_follow_the_parameters():
    assert spec('bell', 2).domain == PolynomialRing('x', 'y')
    assert spec('bell', 2, y='2').domain == PolynomialRing('x')
    assert spec('bell', 2, x='1', y='2').domain == RATIONALS
    assert spec('rr', 2).domain == RationalFunctionField('q')
    assert spec('rr_a', 2).domain == RationalFunctionField('q')
    assert spec('partial_theta', 2).domain == PolynomialRing('q')


def test_bad_parameters():
    with pytest.raises(UnknownFamily):
        generate(spec('no_such_family', 3))
    with pytest.raises(BadParams):
        generate(spec('factorial', 3, a='1'))
    with pytest.raises(BadParams):
        generate(spec('moment_probe', 3, eps='sym'))
    with pytest.raises(BadParams):
        generate(spec('rr', 3, q='1'))
    with pytest.raises(BadParams):
        generate(spec('rr_a', 3, variant='both'))
    with pytest.raises(BadParams):
        generate(spec('rising_factorial', 3, a='one'))
    with pytest.raises(BadParams):
        generate(spec('factorial', -1))


def test_parse_params():
    assert parse_params('a=sym, b=1/2') == {'a': 'sym', 'b': '1/2'}
    assert parse_params('') == {}
    assert parse_params({'x': 1}) == {'x': 1}
    with pytest.raises(BadParams):
        parse_params('a')


def test_series_spec_documents():
    s = SeriesSpec.from_dict({'family': 'f20', 'params': 'a=1,b=sym', 'order': '4'})
    assert s.as_dict() == {'family': 'f20', 'params': {'a': '1', 'b': 'sym'}, 'order': 4}
    with pytest.raises(BadParams):
        SeriesSpec.from_dict({'order': 3})
    with pytest.raises(BadParams):
        SeriesSpec.from_dict({'family': 'bell', 'order': 'many'})


def test_registry():
    registry = families()
    for name in ('factorial', 'rising_factorial', 'odd_double_factorial', 'bell', 'f20_ratio',
                 'tan_ratio', 'partial_theta', 'rr_ratio', 'rr_a_ratio', 'secant_power',
                 'moment_probe', 'motzkin', 'catalan'):
        assert name in registry
        assert registry[name].as_dict()['name'] == name
    assert get_family('rr').name == 'rr_ratio'
    assert get_family('tan').variable == 'u'


# continued-fraction patterns

PATTERNS = [
    ('factorial', {}, 12),
    ('rising_factorial', {}, 12),
    ('rising_factorial', {'a': '3/2'}, 12),
    ('odd_double_factorial', {}, 12),
    ('bell', {}, 10),
    ('f20', {}, 8),
    ('tan', {}, 20),
    ('partial_theta', {}, 10),
    ('rr', {}, 8),
    ('rr_a', {}, 6),
    ('rr_a', {'variant': 'asymmetric'}, 6),
    ('rr_a', {'a': '2/3'}, 6),
    ('secant_power', {}, 8),
    ('catalan', {}, 10),
    ('motzkin', {}, 10),
    pytest.param('rising_factorial', {}, 40, marks=pytest.mark.slow),
    pytest.param('bell', {}, 30, marks=pytest.mark.slow),
    pytest.param('f20', {}, 20, marks=pytest.mark.slow),
    pytest.param('partial_theta', {}, 30, marks=pytest.mark.slow),
    pytest.param('rr', {}, 30, marks=pytest.mark.slow),
]


@pytest.mark.parametrize('name,params,order', PATTERNS)
def test_expansion_follows_the_pattern(name, params, order):
    fam = get_family(name)
    pattern = fam.pattern(params)
    f = generate(SeriesSpec(name, params, order))
    cf = expand(f, ExpansionShape.parse(pattern.shape))
    assert cf.alpha0 == f.domain.one
    if pattern.shape == 'j':
        K = order // 2
        assert as_jfraction(cf) == pattern.jfraction(K)
    else:
        assert len(cf.terms) == order
        assert cf.alphas == pattern.alphas(order)


def test_factorial_alphas_at_order_200():
    cf = expand(factorials(200), ExpansionShape.sfraction())
    assert cf.alphas == [(k + 1) // 2 for k in range(1, 201)]


# closed-form g_k families

GK_PARAMS = [(name, {}) for name in GK_FAMILIES] + [
    ('rr_a_ratio', {'variant': 'asymmetric'}),
    ('rising_factorial', {'a': '5'}),
    ('bell', {'x': '2', 'y': 'sym'}),
]


@pytest.mark.parametrize('name,params', GK_PARAMS)
def test_gk_family_verifies(name, params):
    fam = gk_family(name, params)
    for k in range(-1, 7):
        assert fam.coefficient(k, 0) == fam.domain.one
    assert fam.verify(8, 6).ok


@pytest.mark.parametrize('name,params', GK_PARAMS)
def test_gk_family_catches_a_wrong_alpha(name, params):
    fam = gk_family(name, params)
    wrong = fam.with_alpha(3, fam.alpha(3) + 1)
    report = wrong.verify(8, 6)
    assert not report.ok
    assert (report.k, report.n) == (2, 1)


def test_gk_family_spot_values():
    fam = gk_family('factorial')
    assert fam.coefficient(4, 2) == 72
    assert fam.series(-1, 3) == make_series([1, 0, 0, 0])
    assert fam.series(0, 4) == factorials(4)
    with pytest.raises(UnknownFamily):
        gk_family('tan_ratio')


def test_gk_family_matches_the_expansion():
    fam = gk_family('rising_factorial')
    f = generate(spec('rising_factorial', 8))
    cf = expand(f, ExpansionShape.sfraction())
    assert cf.alphas == [fam.alpha(k) for k in range(1, 9)]


# q-binomials

def test_qbinomial():
    q = Q_RING.gen('q')
    assert qbinomial(4, 2) == 1 + q + 2 * q ** 2 + q ** 3 + q ** 4
    assert qbinomial(7, 0) == Q_RING.one
    assert qbinomial(5, 2, recurrence=2) == qbinomial(5, 2)
    assert qbinomial_by_ratio(5, 2) == qbinomial(5, 2)
    for k in range(7):
        assert qbinomial(6, k, RATIONALS, 1) == comb(6, k)
    with pytest.raises(IndexOutOfRange):
        qbinomial(3, 4)
    with pytest.raises(ArgumentError):
        qbinomial(3, 1, recurrence=3)


def test_qbinomial_recurrences_agree():
    assert qbinomial_mismatches(12) == []


def test_qpochhammer():
    q = Q_RING.gen('q')
    assert qpochhammer(q, 2) == (1 - q) * (1 - q ** 2)
    assert qpochhammer('1/2', 2, RATIONALS, '1/2') == RATIONALS.convert('3/8')


# combinatorial oracles

def _set_partitions(n, k):
    """number of partitions of {1..n} into k blocks, by placing elements one at a time"""
    def place(i, blocks):
        if i == n:
            return 1 if blocks == k else 0
        # join one of the open blocks, or open a new one
        return blocks * place(i + 1, blocks) + (place(i + 1, blocks + 1) if blocks < k else 0)
    return place(0, 0)


def test_stirling_numbers():
    assert stirling2(5, 2) == 15
    assert stirling2(3, 4) == 0
    for n in range(7):
        for k in range(n + 1):
            assert stirling2(n, k) == _set_partitions(n, k)


def test_dumont_kreweras():
    a, b = DK_RING.gen('a'), DK_RING.gen('b')
    assert dumont_kreweras_oracle(2) == a ** 2 + a * b
    for n in range(7):
        assert DK_RING.substitute(dumont_kreweras_oracle(n), a=1, b=1) == factorial(n)
    with pytest.raises(SizeLimit):
        dumont_kreweras_oracle(9)


def test_dumont_kreweras_matches_the_f20_ratio():
    f = generate(spec('f20', 7))
    assert f.domain == DK_RING
    for n in range(8):
        assert f[n] == dumont_kreweras_oracle(n)
