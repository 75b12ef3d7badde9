#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Closed-form g_k families

Each family gives g_{k,n} for k >= -1 together with the coefficients of its
S-fraction, so that

    g_k - g_{k-1} = alpha_{k+1} t g_{k+1}

can be checked with ``euler_gauss_verify``.
"""
from fractions import Fraction
from math import factorial

from ..exception import UnknownFamily
from ..expand import euler_gauss_verify
from ..series import TruncatedSeries
from .combinat import binomial
from .combinat import rising
from .combinat import stirling2
from .families import _halves
from .families import _power
from .families import get_family
from .qseries import qbinomial_or_zero
from .qseries import rr_a_coefficient
from .qseries import rr_coefficient


class GkFamily(object):
    """
    ``coefficient(k, n)`` is g_{k,n}, ``alpha(k)`` the coefficient in A_k = alpha_k t;
    every Delta_k is 0.
    """

    def __init__(self, name, domain, coefficient, alpha, overrides=None):
        self.name = name
        self.domain = domain
        self._coefficient = coefficient
        self._alpha = alpha
        self._overrides = dict(overrides or {})

    def coefficient(self, k, n):
        return self._coefficient(k, n)

    def alpha(self, k):
        if k in self._overrides:
            return self._overrides[k]
        return self._alpha(k)

    def series(self, k, N):
        return TruncatedSeries(self.domain, [self.coefficient(k, n) for n in range(N + 1)])

    def A(self, k, N):
        coeffs = [self.domain.zero] * (N + 1)
        if N >= 1:
            coeffs[1] = self.alpha(k)
        return TruncatedSeries(self.domain, coeffs)

    def with_alpha(self, k, value):
        """the same g_k with alpha_k replaced, for checking that a wrong alpha is caught"""
        overrides = dict(self._overrides)
        overrides[k] = self.domain.convert(value)
        return GkFamily(self.name, self.domain, self._coefficient, self._alpha, overrides)

    def verify(self, N, K):
        g = {k: self.series(k, N) for k in range(-1, K + 1)}
        As = {k: self.A(k, N) for k in range(1, K + 1)}
        return euler_gauss_verify(g, {}, As, N, levels=K)

    def __repr__(self):
        return f'<GkFamily {self.name} over {self.domain}>'


def _split(k):
    """k = 2j - 1 gives (j, True), k = 2j gives (j, False)"""
    if k % 2:
        return (k + 1) // 2, True
    return k // 2, False


def _factorial(domain):
    def g(k, n):
        j, odd = _split(k)
        c = binomial(n + j, n) * (binomial(n + j - 1, n) if odd else binomial(n + j, n))
        return domain.convert(c * factorial(n))
    return g


def _rising_factorial(domain, a):
    def g(k, n):
        j, odd = _split(k)
        return rising(domain, a + j, n) * (binomial(n + j - 1, n) if odd else binomial(n + j, n))
    return g


def _f20(domain, a, b):
    def g(k, n):
        j, odd = _split(k)
        second = b + (j - 1) if odd else b + j
        return domain.rational_scale(rising(domain, a + j, n) * rising(domain, second, n),
                                     Fraction(1, factorial(n)))
    return g


def _bell(domain, x, y):
    def g(k, n):
        j, odd = _split(k)
        total = domain.zero
        for i in range(n + 1):
            c = stirling2(n + j, i + j) * (binomial(i + j - 1, i) if odd else binomial(i + j, i))
            if c:
                total += c * _power(domain, x, i) * _power(domain, y, n - i)
        return total
    return g


def _partial_theta(domain, q):
    def g(k, n):
        j, odd = _split(k)
        top = n + j - 1 if odd else n + j
        return qbinomial_or_zero(top, n, domain, q) * _power(domain, q, n * (n + 2 * j - 1) // 2)
    return g


def gk_family(name, params=None):
    """
    The g_k family of a catalog series: factorial, rising_factorial, f20_ratio,
    bell, rr_ratio, rr_a_ratio or partial_theta.
    """
    fam = get_family(name)
    name = fam.name
    domain, v = fam.resolve(params)
    d = domain
    if name == 'factorial':
        return GkFamily(name, d, _factorial(d), _halves(d.convert, d.convert))
    if name == 'rising_factorial':
        a = v['a']
        return GkFamily(name, d, _rising_factorial(d, a), _halves(lambda j: a + (j - 1), d.convert))
    if name == 'f20_ratio':
        a, b = v['a'], v['b']
        return GkFamily(name, d, _f20(d, a, b), _halves(lambda j: a + (j - 1), lambda j: b + (j - 1)))
    if name == 'bell':
        x, y = v['x'], v['y']
        return GkFamily(name, d, _bell(d, x, y), _halves(lambda j: x, lambda j: y * j))
    if name == 'rr_ratio':
        q = v['q']
        return GkFamily(name, d, lambda k, n: rr_coefficient(d, q, k, n),
                        lambda k: -_power(d, q, k - 1))
    if name == 'rr_a_ratio':
        a, q, variant = v['a'], v['q'], v['variant']
        pattern = fam.pattern(params)
        return GkFamily(f'{name}:{variant}', d,
                        lambda k, n: rr_a_coefficient(d, q, a, k, n, variant), pattern.alpha)
    if name == 'partial_theta':
        q = v['q']
        return GkFamily(name, d, _partial_theta(d, q),
                        _halves(lambda j: _power(d, q, 2 * j - 2),
                                lambda j: _power(d, q, j - 1) * (_power(d, q, j) - 1)))
    raise UnknownFamily(f'{name} has no closed-form g_k family', family=name)


GK_FAMILIES = ('factorial', 'rising_factorial', 'f20_ratio', 'bell', 'rr_ratio',
               'rr_a_ratio', 'partial_theta')
