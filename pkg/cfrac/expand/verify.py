#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Euler-Gauss recurrence check

    g_k - g_{k-1} = Delta_{k+1} g_k + A_{k+1} g_{k+1}        (0 <= k <= K-1)

holding through t^N certifies that g_0/g_{-1} has the continued fraction
built from the Delta_k and A_k through the same order.
"""
from dataclasses import dataclass
from typing import Optional

from ..exception import ArgumentError
from ..exception import BadConstantTerm
from ..logger import SysLogger
from ..series import TruncatedSeries
from ..series import convolve


@dataclass
class EulerGaussReport:
    ok: bool
    levels: int
    order: int
    k: Optional[int] = None
    n: Optional[int] = None
    lhs: object = None
    rhs: object = None

    def as_dict(self, domain=None):
        enc = domain.encode if domain is not None else str
        out = {'ok': self.ok, 'levels': self.levels, 'order': self.order}
        if not self.ok:
            out.update(k=self.k, n=self.n, lhs=enc(self.lhs), rhs=enc(self.rhs))
        return out


def _lookup(family, k):
    if callable(family):
        return family(k)
    try:
        return family[k]
    except (KeyError, IndexError):
        return None


def _coeffs(series, order, zero):
    """coefficients 0..order, zero-padded past the end of a polynomial"""
    if series is None:
        return [zero] * (order + 1)
    c = list(series.coeffs[:order + 1])
    return c + [zero] * (order + 1 - len(c))


def _check_level(domain, k, gprev, gk, gnext, delta, A, order):
    zero = domain.zero
    for n in range(order + 1):
        lhs = gk[n] - gprev[n]
        rhs = convolve(delta, gk, n, zero) + convolve(A, gnext, n, zero)
        if lhs != rhs:
            return n, lhs, rhs
    return None


def euler_gauss_verify(g, deltas, As, N, levels=None):
    """
    ``g`` maps k = -1..K to series, ``deltas`` and ``As`` map k = 1..K to
    series with zero constant term (a missing entry counts as 0); all three may
    also be callables. ``levels`` is K; by default it is read off ``g``.
    """
    # sequences: g[0] is g_-1, deltas[0] and As[0] belong to level 1
    if isinstance(g, (list, tuple)):
        g = {k - 1: s for k, s in enumerate(g)}
    if isinstance(deltas, (list, tuple)):
        deltas = {k + 1: s for k, s in enumerate(deltas)}
    if isinstance(As, (list, tuple)):
        As = {k + 1: s for k, s in enumerate(As)}
    if levels is None:
        if callable(g):
            raise ArgumentError('levels must be given when g is a callable')
        levels = max(g)
    K = levels
    series = {k: _lookup(g, k) for k in range(-1, K + 1)}
    domain = series[-1].domain
    for k, s in series.items():
        if s is None:
            raise BadConstantTerm(f'g_{k} is missing', k=k)
        if s[0] != domain.one:
            raise BadConstantTerm(f'g_{k} has constant term {domain.encode(s[0])}', k=k)
    zero = domain.zero
    rows = {k: _coeffs(s.truncate(N), N, zero) for k, s in series.items()}
    for k in range(1, K + 1):
        for name, family in (('Delta', deltas), ('A', As)):
            s = _lookup(family, k)
            if s is not None and s[0]:
                raise BadConstantTerm(f'{name}_{k} has constant term {domain.encode(s[0])}', k=k)

    for k in range(K):
        delta = _coeffs(_lookup(deltas, k + 1), N, zero)
        A = _coeffs(_lookup(As, k + 1), N, zero)
        bad = _check_level(domain, k, rows[k - 1], rows[k], rows[k + 1], delta, A, N)
        if bad is not None:
            n, lhs, rhs = bad
            SysLogger.debug(f'euler-gauss mismatch at k={k}, n={n}')
            return EulerGaussReport(False, K, N, k, n, lhs, rhs)
    return EulerGaussReport(True, K, N)


def cf_coefficient_series(cf, order):
    """(Deltas, As) of a CFraction as polynomial series through t^order"""
    domain = cf.domain
    deltas, As = {}, {}
    for k, term in enumerate(cf.terms, 1):
        deltas[k] = TruncatedSeries.polynomial(domain, [0] + list(term.delta), order)
        A = [domain.zero] * (order + 1)
        if term.p <= order:
            A[term.p] = term.alpha
        As[k] = TruncatedSeries(domain, A)
    return deltas, As


def verify_table(table):
    """
    Recheck a refined g-table against its own terms, level k through the
    order N_k its row is known to.
    """
    domain = table.domain
    zero = domain.zero
    for k in range(table.levels + 1):
        if table.entry(k, 0) != domain.one:
            raise BadConstantTerm(f'g_{k} has constant term {domain.encode(table.entry(k, 0))}', k=k)
    for k in range(table.levels):
        term = table.terms[k]
        order = table.order(k)
        delta = [zero] + list(term.delta)
        A = [zero] * term.p + [term.alpha]
        gnext = [zero] * (order + 1)
        top = table.rows[k + 2]
        for n in range(min(len(top), order + 1)):
            gnext[n] = top[n]
        bad = _check_level(domain, k, _coeffs(table.row(k - 1), order, zero),
                           _coeffs(table.row(k), order, zero), gnext,
                           delta + [zero] * (order + 1), A + [zero] * (order + 1), order)
        if bad is not None:
            n, lhs, rhs = bad
            return EulerGaussReport(False, table.levels, table.order(0), k, n, lhs, rhs)
    return EulerGaussReport(True, table.levels, table.order(0))
