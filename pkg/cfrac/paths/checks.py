#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Cross-checks between path sums, triangular tables, continued fractions and
the refined g-table
"""
from dataclasses import dataclass
from dataclasses import field
from typing import List

from sympy.polys.matrices import DomainMatrix

from ..config import settings
from ..exception import ArgumentError
from ..expand import ExpansionShape
from ..expand import cf_to_series
from ..expand import expand_refined
from ..expand import jfraction
from ..expand import sfraction
from ..logger import SysLogger
from ..series import TruncatedSeries
from ..series import mul
from .enumerate import enumerate_weighted_paths
from .tables import jacobi_rogers_table
from .tables import stieltjes_tables
from .weights import DYCK
from .weights import MOTZKIN
from .weights import PathWeights


def _encode_items(domain, items):
    out = []
    for item in items:
        out.append({k: (domain.encode(v) if domain.contains(v) else v) for k, v in item.items()})
    return out


@dataclass
class FlajoletReport:
    ok: bool
    order: int
    enumerated: bool
    mismatches: List[dict] = field(default_factory=list)
    products: List[int] = field(default_factory=list)

    def as_dict(self, domain):
        return {'ok': self.ok, 'order': self.order, 'enumerated': self.enumerated,
                'products_checked': self.products,
                'mismatches': _encode_items(domain, self.mismatches)}


def _jfraction_series(w, N):
    """the J-fraction in t whose path sums are those of ``w``, through t^N"""
    gamma, beta = w.jfraction_weights()
    m = N // 2
    cf = jfraction(w.domain, [gamma(i) for i in range(m + 1)],
                   [beta(i) for i in range(1, m + 1)])
    return cf_to_series(cf, N)


def flajolet_check(w, N, table=None):
    """
    Compare, for 0 <= n <= N, the path sums from 0 to 0 by enumeration, column 0
    of the Jacobi-Rogers table and the coefficients of the J-fraction. When the
    enumeration runs, the paths from 0 to l (l <= 3) are also compared with
    a_0..a_{l-1} t^l f_0 f_1 ... f_l, f_j the J-fraction of the weights seen
    from height j.
    """
    domain = w.domain
    table = table or jacobi_rogers_table(w, N)
    series = _jfraction_series(w, N)
    enumerated = N <= min(settings.limits.flajolet, settings.limits.enumeration)
    if not enumerated:
        SysLogger.debug(f'flajolet check at order {N}: enumeration leg skipped')
    mismatches = []
    for n in range(N + 1):
        legs = {'table': table.entry(n, 0), 'cfraction': series[n]}
        if enumerated:
            expected, reference = enumerate_weighted_paths(w, n, 0, 0), 'enumeration'
        else:
            expected, reference = legs.pop('cfraction'), 'cfraction'
        for leg, value in legs.items():
            if value != expected:
                mismatches.append({'n': n, 'leg': leg, 'reference': reference,
                                   'expected': expected, 'got': value})

    products = []
    if enumerated:
        for ell in range(1, min(3, N) + 1):
            product = _height_product(w, ell, N)
            for n in range(N + 1):
                got = enumerate_weighted_paths(w, n, 0, ell)
                if got != product[n]:
                    mismatches.append({'n': n, 'leg': f'product_0_{ell}', 'reference': 'enumeration',
                                       'expected': got, 'got': product[n]})
            products.append(ell)
    return FlajoletReport(not mismatches, N, enumerated, mismatches, products)


def _height_product(w, ell, N):
    """a_0 ... a_{ell-1} t^ell f_0 ... f_ell through t^N"""
    domain = w.domain
    order = N - ell
    prod = TruncatedSeries.one(domain, order)
    for j in range(ell + 1):
        prod = mul(prod, _jfraction_series(w.shifted(j), order))
    scale = domain.one
    for i in range(ell):
        scale *= w.rise(i)
    return [domain.zero] * ell + [scale * c for c in prod.coeffs]


@dataclass
class HankelReport:
    ok: bool
    size: int
    checks: List[dict] = field(default_factory=list)

    def as_dict(self, domain):
        return {'ok': self.ok, 'size': self.size, 'checks': _encode_items(domain, self.checks)}


def _matrix(rows, domain):
    return DomainMatrix([list(r) for r in rows], (len(rows), len(rows[0])), domain.dom)


def _diagonal(values, domain):
    n = len(values)
    return _matrix([[values[i] if i == j else domain.zero for j in range(n)] for i in range(n)], domain)


def _block_identity(name, H, T, diag, domain, note=None):
    size = len(diag)
    lhs = _matrix(H, domain)
    L = _matrix(T.square(size - 1), domain)
    rhs = L * _diagonal(diag, domain) * L.transpose()
    check = {'identity': name, 'ok': lhs == rhs}
    if note:
        check['note'] = note
    if not check['ok']:
        for i in range(size):
            for j in range(size):
                x, y = lhs[i, j].element, rhs[i, j].element
                if x != y:
                    check.update(i=i, j=j, expected=x, got=y)
                    return check
    return check


def hankel_factorization_check(a, w, N, shift=None):
    """
    Check the Hankel block identities on (N+1) x (N+1) leading blocks:

        Motzkin weights:  H0(a) = J diag(a0, a0 b1, a0 b1 b2, ...) J^T
        Dyck weights:     H0(a) = S diag(a0, a0 al1 al2, ...) S^T
                          H1(a) = S' diag(a0 al1, a0 al1 al2 al3, ...) S'^T

    ``shift`` limits the Dyck case to one of the two identities.
    """
    domain = w.domain
    if isinstance(a, TruncatedSeries):
        a = a.coeffs
    a = [domain.convert(x) for x in a]
    need = 2 * N + (1 if shift == 1 else 0)
    if len(a) <= need:
        raise ArgumentError(f'a_0..a_{need} are needed, only a_0..a_{len(a) - 1} given')
    checks = []
    if w.mode == MOTZKIN:
        J = jacobi_rogers_table(w, N)
        diag = [a[0]]
        for k in range(1, N + 1):
            diag.append(diag[-1] * w.effective_fall(k))
        H0 = [[a[i + j] for j in range(N + 1)] for i in range(N + 1)]
        checks.append(_block_identity('H0 = J D J^T', H0, J, diag, domain,
                                      note='equivalent to the addition formula through total order N'))
    else:
        S, Sp = stieltjes_tables(w, N)
        alpha = w.effective_fall
        if shift in (None, 0):
            diag = [a[0]]
            for k in range(1, N + 1):
                diag.append(diag[-1] * alpha(2 * k - 1) * alpha(2 * k))
            H0 = [[a[i + j] for j in range(N + 1)] for i in range(N + 1)]
            checks.append(_block_identity('H0 = S D S^T', H0, S, diag, domain))
        if shift == 1 or (shift is None and len(a) > 2 * N + 1):
            diag = [a[0] * alpha(1)]
            for k in range(1, N + 1):
                diag.append(diag[-1] * alpha(2 * k) * alpha(2 * k + 1))
            H1 = [[a[i + j + 1] for j in range(N + 1)] for i in range(N + 1)]
            checks.append(_block_identity("H1 = S' D' S'^T", H1, Sp, diag, domain))
    return HankelReport(all(c['ok'] for c in checks), N + 1, checks)


@dataclass
class CorrespondenceReport:
    ok: bool
    checked: int
    mismatches: List[dict] = field(default_factory=list)

    def as_dict(self, domain):
        return {'ok': self.ok, 'checked': self.checked,
                'mismatches': _encode_items(domain, self.mismatches)}


def _padded(values, domain, size):
    """weights past the given ones cannot reach the compared entries; zeros stand in"""
    return list(values) + [domain.zero] * size


def g_table_correspondence_check(w, N):
    """
    Expand the fraction of ``w`` with the refined algorithm (g_-1 = 1) and compare
    the g-table with the triangles:

        Dyck:     g_{2j,n} = S_{n+j,j},  g_{2j+1,n} = S'_{n+j,j}
        Motzkin:  g_{k,n} = J_{n+k,k}
    """
    domain = w.domain
    gamma, beta = w.jfraction_weights()
    if w.mode == DYCK:
        alphas = [beta(i) for i in range(1, N + 1)]
        f = cf_to_series(sfraction(domain, alphas), N)
        _, table = expand_refined(f, ExpansionShape.cfraction())
        S, Sp = stieltjes_tables(_padded(alphas, domain, N), N, domain=domain, self_test=False)

        def expected(k, n):
            j, odd = divmod(k, 2)
            return (Sp if odd else S).entry(n + j, j)
    else:
        m = N // 2
        gammas = _padded([gamma(i) for i in range(m + 1)], domain, N)
        betas = _padded([beta(i) for i in range(1, m + 1)], domain, N)
        f = cf_to_series(jfraction(domain, gammas[:m + 1], betas[:m]), N)
        _, table = expand_refined(f, ExpansionShape.jfraction())
        J = jacobi_rogers_table(PathWeights.motzkin(domain, betas, gammas), N)

        def expected(k, n):
            return J.entry(n + k, k)

    mismatches = []
    checked = 0
    for k in range(table.levels + 1):
        for n in range(table.order(k) + 1):
            checked += 1
            want = expected(k, n)
            got = table.entry(k, n)
            if got != want:
                mismatches.append({'k': k, 'n': n, 'expected': want, 'got': got})
    SysLogger.debug(f'g-table correspondence: {checked} entries, {len(mismatches)} mismatches')
    return CorrespondenceReport(not mismatches, checked, mismatches)
