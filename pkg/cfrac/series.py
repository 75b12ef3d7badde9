#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Truncated formal power series

A ``TruncatedSeries`` knows c_0..c_N exactly and nothing beyond t^N. Every
binary operation keeps the smaller of the two orders.
"""
from fractions import Fraction

from .coeffs import to_rational
from .exception import ConstantTermViolation
from .exception import DomainMismatch
from .exception import NonUnitConstantTerm
from .exception import NonzeroLowCoefficients
from .exception import OrderUnderflow
from .exception import ArgumentError


class TruncatedSeries(object):
    __slots__ = ('domain', 'coeffs')

    def __init__(self, domain, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ArgumentError('a truncated series needs at least c_0')
        object.__setattr__(self, 'domain', domain)
        object.__setattr__(self, 'coeffs', coeffs)

    def __setattr__(self, key, value):
        raise AttributeError('TruncatedSeries is immutable')

    @classmethod
    def from_values(cls, domain, values):
        """coefficients given as ints, Fractions, text or domain elements"""
        return cls(domain, [domain.convert(v) for v in values])

    @classmethod
    def constant(cls, domain, value, order):
        return cls(domain, [domain.convert(value)] + [domain.zero] * order)

    @classmethod
    def one(cls, domain, order):
        return cls(domain, [domain.one] + [domain.zero] * order)

    @classmethod
    def polynomial(cls, domain, coeffs, order):
        """a polynomial in t given by its low coefficients, padded with zeros through t^order"""
        coeffs = [domain.convert(c) for c in coeffs][:order + 1]
        return cls(domain, coeffs + [domain.zero] * (order + 1 - len(coeffs)))

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and self.domain == other.domain
                and self.coeffs == other.coeffs)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.domain, self.coeffs))

    def __repr__(self):
        terms = ', '.join(self.domain.encode(c) for c in self.coeffs[:8])
        more = ', ...' if len(self.coeffs) > 8 else ''
        return f'<TruncatedSeries {self.domain} [{terms}{more}] O(t^{self.order + 1})>'

    def encode(self):
        return [self.domain.encode(c) for c in self.coeffs]

    def truncate(self, order):
        if order > self.order:
            raise OrderUnderflow(f'series is known through t^{self.order}, not t^{order}')
        return TruncatedSeries(self.domain, self.coeffs[:order + 1])

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __neg__(self):
        return TruncatedSeries(self.domain, [-c for c in self.coeffs])

    def scale(self, c):
        """multiply every coefficient by the domain element (or rational) ``c``"""
        c = self.domain.convert(c)
        return TruncatedSeries(self.domain, [c * x for x in self.coeffs])

    def rational_scale(self, r):
        r = to_rational(r)
        return TruncatedSeries(self.domain, [x * r for x in self.coeffs])

    def map(self, func):
        return TruncatedSeries(self.domain, [func(c) for c in self.coeffs])


def _same_domain(f, g):
    if f.domain != g.domain:
        raise DomainMismatch(f'series over {f.domain} and {g.domain}',
                             left=f.domain.descriptor, right=g.domain.descriptor)


def add(f, g):
    _same_domain(f, g)
    order = min(f.order, g.order)
    return TruncatedSeries(f.domain, [f.coeffs[n] + g.coeffs[n] for n in range(order + 1)])


def sub(f, g):
    _same_domain(f, g)
    order = min(f.order, g.order)
    return TruncatedSeries(f.domain, [f.coeffs[n] - g.coeffs[n] for n in range(order + 1)])


def convolve(a, b, n, zero):
    """coefficient n of the product of coefficient lists a and b"""
    total = zero
    for i in range(n + 1):
        x = a[i]
        if x:
            y = b[n - i]
            if y:
                total += x * y
    return total


def mul(f, g):
    _same_domain(f, g)
    order = min(f.order, g.order)
    zero = f.domain.zero
    a, b = f.coeffs, g.coeffs
    return TruncatedSeries(f.domain, [convolve(a, b, n, zero) for n in range(order + 1)])


def reciprocal(f):
    """
    1/f through order(f); c_0 must be invertible (exactly 1 over a polynomial ring)
    """
    domain = f.domain
    c = f.coeffs
    if not domain.series_unit(c[0]):
        raise NonUnitConstantTerm(f'cannot invert a series with constant term {domain.encode(c[0])}',
                                  constant=domain.encode(c[0]))
    inv = domain.one if c[0] == domain.one else domain.exact_div(domain.one, c[0])
    h = [inv]
    for n in range(1, len(c)):
        total = domain.zero
        for i in range(1, n + 1):
            if c[i]:
                total += c[i] * h[n - i]
        h.append(-total * inv if inv != domain.one else -total)
    return TruncatedSeries(domain, h)


def shift_down(f, p):
    """t^{-p} f, for f with c_0 = ... = c_{p-1} = 0"""
    if p < 1:
        raise ArgumentError(f'shift must be positive, got {p}')
    if p > f.order:
        raise OrderUnderflow(f'cannot shift a series of order {f.order} down by {p}',
                             order=f.order, shift=p)
    for n in range(p):
        if f.coeffs[n]:
            raise NonzeroLowCoefficients(f'coefficient of t^{n} is {f.domain.encode(f.coeffs[n])}',
                                         index=n)
    return TruncatedSeries(f.domain, f.coeffs[p:])


def log1(f):
    """formal log of a series with constant term 1"""
    domain = f.domain
    c = f.coeffs
    if c[0] != domain.one:
        raise ConstantTermViolation('log needs constant term 1', constant=domain.encode(c[0]))
    # n c_n = sum_{i=1}^{n} i L_i c_{n-i}
    logs = [domain.zero]
    for n in range(1, len(c)):
        total = domain.zero
        for i in range(1, n):
            if logs[i] and c[n - i]:
                total += logs[i] * c[n - i] * i
        logs.append(c[n] - domain.rational_scale(total, Fraction(1, n)))
    return TruncatedSeries(domain, logs)


def exp0(f):
    """formal exp of a series with constant term 0"""
    domain = f.domain
    c = f.coeffs
    if c[0]:
        raise ConstantTermViolation('exp needs constant term 0', constant=domain.encode(c[0]))
    # n E_n = sum_{i=1}^{n} i c_i E_{n-i}
    e = [domain.one]
    for n in range(1, len(c)):
        total = domain.zero
        for i in range(1, n + 1):
            if c[i]:
                total += c[i] * e[n - i] * i
        e.append(domain.rational_scale(total, Fraction(1, n)))
    return TruncatedSeries(domain, e)


def compose_even(f, order):
    """f(t^2) through t^order, for building series in t from series in u = t^2"""
    zero = f.domain.zero
    out = [zero] * (order + 1)
    for n, c in enumerate(f.coeffs):
        if 2 * n > order:
            break
        out[2 * n] = c
    if 2 * f.order + 1 < order:
        raise OrderUnderflow(f'series of order {f.order} in u fixes t only through t^{2 * f.order + 1}')
    return TruncatedSeries(f.domain, out)
