#!/usr/bin/env python
# -*- coding: utf-8 -*-
from math import comb
from math import factorial

import pytest

from cfrac.catalog import SeriesSpec
from cfrac.catalog import generate
from cfrac.catalog.combinat import rising
from cfrac.coeffs import RATIONALS
from cfrac.coeffs import PolynomialRing
from cfrac.exception import ArgumentError
from cfrac.exception import IndexOutOfRange
from cfrac.exception import SizeLimit
from cfrac.exception import TableSelfTestFailed
from cfrac.paths import DYCK
from cfrac.paths import MOTZKIN
from cfrac.paths import PathWeights
from cfrac.paths import enumerate_weighted_paths
from cfrac.paths import flajolet_check
from cfrac.paths import g_table_correspondence_check
from cfrac.paths import hankel_factorization_check
from cfrac.paths import jacobi_rogers_table
from cfrac.paths import path_weight
from cfrac.paths import stieltjes_tables
from cfrac.series import compose_even

from .conftest import factorials


def factorial_alphas(count):
    return [(i + 1) // 2 for i in range(1, count + 1)]


def factorial_dyck():
    return PathWeights.dyck(RATIONALS, lambda i: (i + 1) // 2)


def factorial_motzkin():
    return PathWeights.motzkin(RATIONALS, lambda k: k * k, lambda k: 2 * k + 1)


# triangles

def test_stieltjes_tables_of_the_factorials():
    S, Sp = stieltjes_tables(factorial_alphas(12), 6, domain=RATIONALS)
    assert S.size == Sp.size == 6
    for n in range(7):
        for k in range(n + 1):
            assert S.entry(n, k) == comb(n, k) ** 2 * factorial(n - k)
            assert Sp.entry(n, k) == comb(n + 1, k + 1) * comb(n, k) * factorial(n - k)
    assert list(Sp.rows[6]) == [5040, 15120, 12600, 4200, 630, 42, 1]
    assert S.column(0) == [factorial(n) for n in range(7)]


def test_stieltjes_tables_from_weights():
    S, Sp = stieltjes_tables(factorial_dyck(), 5)
    assert (S, Sp) == stieltjes_tables(factorial_alphas(10), 5, domain=RATIONALS)


def test_jacobi_rogers_rising_powers():
    R = PolynomialRing('a')
    a = R.gen('a')
    w = PathWeights.motzkin(R, lambda k: k * (a + k - 1), lambda k: 2 * k + a)
    J = jacobi_rogers_table(w, 10)
    for n in range(11):
        for k in range(n + 1):
            assert J.entry(n, k) == comb(n, k) * rising(R, a + k, n - k)


def test_triangular_table_access():
    J = jacobi_rogers_table(factorial_motzkin(), 4)
    assert J.entry(2, 3) == 0
    with pytest.raises(IndexError):
        J.entry(5, 0)
    square = J.square()
    assert len(square) == 5 and all(len(row) == 5 for row in square)
    assert J.encode()[2] == ['2', '4', '1']
    assert J.replace(2, 0, 3) != J


def test_self_test_catches_a_drifting_alpha():

    class Drifting(object):
        domain = RATIONALS

        def __init__(self):
            self.calls = 0

        def effective_fall(self, i):
            self.calls += 1
            return RATIONALS.convert(self.calls)

    with pytest.raises(TableSelfTestFailed):
        stieltjes_tables(Drifting(), 3)


def test_missing_weights():
    with pytest.raises(IndexOutOfRange):
        stieltjes_tables([1, 2], 3, domain=RATIONALS)
    w = PathWeights.dyck(RATIONALS, [1, 2])
    assert w.has_fall(2) and not w.has_fall(3)
    with pytest.raises(IndexOutOfRange):
        w.alpha(3)
    with pytest.raises(ArgumentError):
        w.beta(1)
    with pytest.raises(ArgumentError):
        factorial_motzkin().alpha(1)
    with pytest.raises(ArgumentError):
        PathWeights(RATIONALS, 'schroeder', [1])


# enumeration

@pytest.mark.parametrize('size', [4, 6, pytest.param(8, marks=pytest.mark.slow)])
def test_symbolic_enumeration_matches_the_tables(size):
    w = PathWeights.symbolic(MOTZKIN, size)
    J = jacobi_rogers_table(w, size)
    for n in range(size + 1):
        for k in range(n + 1):
            assert enumerate_weighted_paths(w, n, 0, k) == J.entry(n, k)

    # Dyck words of length 2n + 1 stay within the enumeration cap for n <= 6
    size = min(size, 6)
    w = PathWeights.symbolic(DYCK, 2 * size + 2)
    S, Sp = stieltjes_tables(w, size)
    for n in range(size + 1):
        for k in range(n + 1):
            assert enumerate_weighted_paths(w, 2 * n, 0, 2 * k) == S.entry(n, k)
            assert enumerate_weighted_paths(w, 2 * n + 1, 0, 2 * k + 1) == Sp.entry(n, k)


@pytest.mark.slow
def test_symbolic_enumeration_with_rises():
    w = PathWeights.symbolic(MOTZKIN, 8, rises=True)
    J = jacobi_rogers_table(w, 8)
    # rise weights are folded into the falls, so only the paths back to 0 agree
    for n in range(9):
        assert enumerate_weighted_paths(w, n, 0, 0) == J.entry(n, 0)


def test_path_weight():
    w = PathWeights.motzkin(RATIONALS, [2, 3, 5], [7, 11, 13, 17])
    assert path_weight('ULULDDLUD', w) == 11 * 13 * 3 * 2 * 7 * 2
    assert path_weight('uudd', w) == 6
    with pytest.raises(ArgumentError):
        path_weight('D', w)
    with pytest.raises(ArgumentError):
        path_weight('UX', w)
    with pytest.raises(ArgumentError):
        path_weight('L', factorial_dyck())


def test_enumeration_limits():
    w = factorial_motzkin()
    with pytest.raises(SizeLimit):
        enumerate_weighted_paths(w, 15)
    with pytest.raises(ArgumentError):
        enumerate_weighted_paths(w, 2, 0, -1)
    with pytest.raises(ArgumentError):
        enumerate_weighted_paths(factorial_dyck(), 2, mode=MOTZKIN)
    assert enumerate_weighted_paths(w, 3, 0, 0) == factorial(3)


# identity checks

def test_flajolet_check_motzkin_numbers():
    w = PathWeights.motzkin(RATIONALS, lambda k: 1, lambda k: 1)
    report = flajolet_check(w, 8)
    assert report.ok and report.enumerated
    assert report.products == [1, 2, 3]
    assert report.as_dict(RATIONALS)['mismatches'] == []


def test_flajolet_check_reports_a_bad_table():
    w = factorial_motzkin()
    table = jacobi_rogers_table(w, 6)
    table = table.replace(3, 0, table.entry(3, 0) + 1)
    report = flajolet_check(w, 6, table)
    assert not report.ok
    bad = report.as_dict(RATIONALS)['mismatches']
    assert bad == [{'n': 3, 'leg': 'table', 'reference': 'enumeration', 'expected': '6', 'got': '7'}]


def test_flajolet_check_without_enumeration():
    report = flajolet_check(factorial_motzkin(), 12)
    assert report.ok and not report.enumerated
    assert report.products == []


def test_hankel_factorization_dyck():
    report = hankel_factorization_check(factorials(11), factorial_dyck(), 5)
    assert report.ok
    assert [c['identity'] for c in report.checks] == ['H0 = S D S^T', "H1 = S' D' S'^T"]
    assert report.size == 6


def test_hankel_factorization_motzkin():
    report = hankel_factorization_check(factorials(10), factorial_motzkin(), 5)
    assert report.ok and len(report.checks) == 1


def test_hankel_factorization_mismatch():
    a = list(factorials(10).coeffs)
    a[4] += 1
    report = hankel_factorization_check(a, factorial_motzkin(), 5)
    assert not report.ok
    check = report.as_dict(RATIONALS)['checks'][0]
    assert (check['i'], check['j']) == (0, 4)
    with pytest.raises(ArgumentError):
        hankel_factorization_check(factorials(9), factorial_motzkin(), 5)


def test_hankel_blocks_of_size_eight():
    assert hankel_factorization_check(factorials(15), factorial_dyck(), 7).ok
    ones = PathWeights.motzkin(RATIONALS, lambda k: 1, lambda k: 1)
    assert hankel_factorization_check(generate(SeriesSpec('motzkin', order=14)), ones, 7).ok
    # secant powers in t: gamma = 0, beta_k = k(x+k-1)
    a = compose_even(generate(SeriesSpec('secant_power', {'x': 'sym'}, 7)), 14)
    x = a.domain.gen('x')
    w = PathWeights.motzkin(a.domain, lambda k: k * (x + k - 1), lambda k: 0)
    assert hankel_factorization_check(a, w, 7).ok


@pytest.mark.parametrize('w', [factorial_dyck(), factorial_motzkin(),
                               PathWeights.motzkin(RATIONALS, lambda k: k, lambda k: k + 1)])
def test_g_table_correspondence(w):
    report = g_table_correspondence_check(w, 8)
    assert report.ok
    assert report.checked > 0


def test_g_table_correspondence_symbolic():
    report = g_table_correspondence_check(PathWeights.symbolic(DYCK, 6), 5)
    assert report.ok
