#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Named series families

Each generator is registered with the ``family`` decorator, which records its
parameters and the continued fraction its series is known to have. A
parameter given as ``sym`` becomes an indeterminate; the domain follows from
which parameters are symbolic.
"""
import inspect
import sys
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from math import comb
from math import factorial
from typing import Callable
from typing import Optional

from ..coeffs import RATIONALS
from ..coeffs import PolynomialRing
from ..coeffs import RationalFunctionField
from ..coeffs import to_rational
from ..exception import BadParams
from ..exception import DivisionByZero
from ..exception import ParseError
from ..exception import UnknownFamily
from ..logger import SysLogger
from ..series import TruncatedSeries
from ..series import exp0
from ..series import log1
from ..series import mul
from ..series import reciprocal
from .combinat import rising
from .combinat import stirling2_row
from .qseries import Q_RING
from .qseries import qbinomial
from .qseries import qpochhammer
from .qseries import rr_a_coefficient

SYMBOLIC = 'sym'
_SYMBOLIC_WORDS = ('sym', 'symbolic')


@dataclass
class Pattern:
    """The expansion a family's series is known to have"""
    shape: Optional[str]
    text: str
    alpha: Optional[Callable] = None
    gamma: Optional[Callable] = None
    beta: Optional[Callable] = None

    def alphas(self, K):
        return [self.alpha(k) for k in range(1, K + 1)]

    def jfraction(self, K):
        """(gamma_0..gamma_{K-1}, beta_1..beta_K)"""
        return [self.gamma(k) for k in range(K)], [self.beta(k) for k in range(1, K + 1)]


class Family(object):

    def __init__(self, name, func, params=None, fields=(), numeric=(), choices=None,
                 pattern=None, variable='t', describe=''):
        self.name = name
        self.func = func
        self.params = dict(params or {})
        self.fields = tuple(fields)
        self.numeric = tuple(numeric)
        self.choices = dict(choices or {})
        self.pattern_func = pattern
        self.variable = variable
        self.describe = describe

    def resolve(self, params=None):
        """(domain, values) for the given parameter texts over the defaults"""
        given = dict(params or {})
        unknown = set(given) - set(self.params)
        if unknown:
            raise BadParams(f'{self.name} takes no parameter {", ".join(sorted(unknown))}; '
                            f'its parameters are {sorted(self.params)}', family=self.name)
        merged = dict(self.params)
        merged.update(given)
        symbolic, numbers, words = [], {}, {}
        for name, value in merged.items():
            if name in self.choices:
                value = str(value)
                if value not in self.choices[name]:
                    raise BadParams(f'{name} must be one of {self.choices[name]}, got {value!r}')
                words[name] = value
                continue
            if value is None:
                raise BadParams(f'{self.name} needs the parameter {name}', family=self.name)
            if isinstance(value, str) and value.strip().lower() in _SYMBOLIC_WORDS:
                if name in self.numeric:
                    raise BadParams(f'{name} of {self.name} must be a rational number', family=self.name)
                symbolic.append(name)
                continue
            try:
                numbers[name] = to_rational(value)
            except (ParseError, TypeError, ValueError, ZeroDivisionError):
                raise BadParams(f'{name} = {value!r} is neither a rational number nor sym')

        fields = [name for name in symbolic if name in self.fields]
        if fields:
            if len(symbolic) > 1:
                raise BadParams(f'{self.name} allows only {fields[0]} to be symbolic')
            domain = RationalFunctionField(fields[0])
        elif symbolic:
            domain = PolynomialRing(*symbolic)
        else:
            domain = RATIONALS
        values = {name: domain.gen(name) for name in symbolic}
        values.update({name: domain.convert(r) for name, r in numbers.items()})
        values.update(words)
        for name in self.fields:
            if name in numbers and numbers[name] in (0, 1, -1):
                raise BadParams(f'{name} must not be 0, 1 or -1', family=self.name)
        return domain, values

    def generate(self, order, params=None):
        if order < 0:
            raise BadParams(f'order must be >= 0, got {order}')
        domain, values = self.resolve(params)
        SysLogger.debug(f'generating {self.name} over {domain} through t^{order}')
        try:
            return self.func(domain, order, **values)
        except DivisionByZero as e:
            raise BadParams(f'{self.name} is undefined at these parameters: {e.msg}', family=self.name)

    def pattern(self, params=None):
        if self.pattern_func is None:
            return Pattern(None, 'no closed form')
        domain, values = self.resolve(params)
        return self.pattern_func(domain, **values)

    def as_dict(self):
        return {'name': self.name, 'params': {k: (str(v) if v is not None else None)
                                              for k, v in self.params.items()},
                'variable': self.variable, 'describe': self.describe,
                'pattern': self.pattern().text if self.pattern_func else 'no closed form'}


def family(name, **options):
    """register the decorated generator ``func(domain, order, **params)`` as ``name``"""
    def wrapper(func):
        func._family = Family(name, func, **options)
        return func
    return wrapper


def families():
    """every registered family, by name"""
    module = sys.modules[__name__]
    found = inspect.getmembers(module, lambda f: callable(f) and hasattr(f, '_family'))
    return {f._family.name: f._family for _, f in found}


# short names accepted wherever a family name is
ALIASES = {'rr': 'rr_ratio', 'rr_a': 'rr_a_ratio', 'f20': 'f20_ratio', 'tan': 'tan_ratio'}


def get_family(name):
    registry = families()
    name = ALIASES.get(name, name)
    if name not in registry:
        raise UnknownFamily(f'unknown family {name!r}; known: {", ".join(sorted(registry))}',
                            family=name)
    return registry[name]


def parse_params(text):
    """'a=sym,b=1/2' (or a mapping) to a dict of parameter texts"""
    if not text:
        return {}
    if isinstance(text, dict):
        return {str(k): v for k, v in text.items()}
    out = {}
    for item in str(text).split(','):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition('=')
        if not sep or not key.strip():
            raise BadParams(f'parameter {item!r} is not of the form name=value')
        out[key.strip()] = value.strip()
    return out


@dataclass
class SeriesSpec:
    name: str
    params: dict = field(default_factory=dict)
    order: int = 0

    @property
    def family(self):
        return get_family(self.name)

    @property
    def domain(self):
        return self.family.resolve(self.params)[0]

    def as_dict(self):
        return {'family': self.name, 'params': {k: str(v) for k, v in self.params.items()},
                'order': self.order}

    @classmethod
    def from_dict(cls, data):
        if 'family' not in data:
            raise BadParams('a family spec needs "family"')
        try:
            order = int(data.get('order', 0))
        except (TypeError, ValueError):
            raise BadParams(f'bad order {data.get("order")!r}')
        return cls(data['family'], parse_params(data.get('params')), order)


def generate(spec):
    """the series of a SeriesSpec through t^order"""
    return spec.family.generate(spec.order, spec.params)


# patterns

def _halves(odd, even):
    """alpha_{2j-1} = odd(j), alpha_{2j} = even(j)"""
    def alpha(k):
        j = (k + 1) // 2
        return odd(j) if k % 2 else even(j)
    return alpha


def _power(domain, x, e):
    out = domain.one
    for _ in range(e):
        out *= x
    return out


# generators

@family('factorial', pattern=lambda d: Pattern(
        's', 'alpha_{2j-1} = alpha_{2j} = j', alpha=_halves(d.convert, d.convert)),
        describe='sum n! t^n')
def factorial_series(domain, order):
    return TruncatedSeries(domain, [domain.convert(factorial(n)) for n in range(order + 1)])


@family('rising_factorial', params={'a': SYMBOLIC}, pattern=lambda d, a: Pattern(
        's', 'alpha_{2j-1} = a+j-1, alpha_{2j} = j',
        alpha=_halves(lambda j: a + (j - 1), d.convert)),
        describe='sum a(a+1)...(a+n-1) t^n')
def rising_factorial_series(domain, order, a):
    return TruncatedSeries(domain, [rising(domain, a, n) for n in range(order + 1)])


@family('odd_double_factorial', pattern=lambda d: Pattern(
        's', 'alpha_k = k', alpha=d.convert), describe='sum (2n-1)!! t^n')
def odd_double_factorial_series(domain, order):
    coeffs, c = [], 1
    for n in range(order + 1):
        coeffs.append(domain.convert(c))
        c *= 2 * n + 1
    return TruncatedSeries(domain, coeffs)


@family('bell', params={'x': SYMBOLIC, 'y': SYMBOLIC}, pattern=lambda d, x, y: Pattern(
        's', 'alpha_{2k-1} = x, alpha_{2k} = k y',
        alpha=_halves(lambda j: x, lambda j: y * j)),
        describe='sum_n sum_k S(n,k) x^k y^(n-k) t^n')
def bell_series(domain, order, x, y):
    coeffs = []
    for n in range(order + 1):
        row = stirling2_row(n)
        total = domain.zero
        for k, s in enumerate(row):
            if s:
                total += s * _power(domain, x, k) * _power(domain, y, n - k)
        coeffs.append(total)
    return TruncatedSeries(domain, coeffs)


def _f20(domain, order, a, b):
    return TruncatedSeries(domain, [domain.rational_scale(rising(domain, a, n) * rising(domain, b, n),
                                                          Fraction(1, factorial(n)))
                                    for n in range(order + 1)])


@family('f20_ratio', params={'a': SYMBOLIC, 'b': SYMBOLIC}, pattern=lambda d, a, b: Pattern(
        's', 'alpha_{2j-1} = a+j-1, alpha_{2j} = b+j-1',
        alpha=_halves(lambda j: a + (j - 1), lambda j: b + (j - 1))),
        describe='2F0(a,b;t) / 2F0(a,b-1;t)')
def f20_ratio_series(domain, order, a, b):
    return mul(_f20(domain, order, a, b), reciprocal(_f20(domain, order, a, b - 1)))


@family('tan_ratio', variable='u', pattern=lambda d: Pattern(
        's', 'alpha_k = 1/((2k-1)(2k+1))',
        alpha=lambda k: d.convert(Fraction(1, (2 * k - 1) * (2 * k + 1)))),
        describe='tan(t)/t as a series in u = t^2')
def tan_ratio_series(domain, order):
    sin_t = TruncatedSeries.from_values(domain, [Fraction((-1) ** n, factorial(2 * n + 1))
                                                 for n in range(order + 1)])
    return mul(sin_t, reciprocal(_cosine(domain, order)))


def _cosine(domain, order):
    return TruncatedSeries.from_values(domain, [Fraction((-1) ** n, factorial(2 * n))
                                                for n in range(order + 1)])


@family('partial_theta', params={'q': SYMBOLIC}, pattern=lambda d, q: Pattern(
        's', 'alpha_{2j-1} = q^(2j-2), alpha_{2j} = q^(j-1) (q^j - 1)',
        alpha=_halves(lambda j: _power(d, q, 2 * j - 2),
                      lambda j: _power(d, q, j - 1) * (_power(d, q, j) - 1))),
        describe='sum q^(n(n-1)/2) t^n')
def partial_theta_series(domain, order, q):
    return TruncatedSeries(domain, [_power(domain, q, n * (n - 1) // 2) for n in range(order + 1)])


def _rr_polynomials(order, ring, q):
    """
    P_n with R(qt)/R(t) = sum P_n / (q;q)_n t^n, through
    H_n = -sum_i [n over i] q^{i(i-1)} H_{n-i} and P_n = sum_i [n over i] q^{i^2} H_{n-i}
    """
    H = [ring.one]
    P = []
    for n in range(order + 1):
        if n:
            h = ring.zero
            for i in range(1, n + 1):
                h -= qbinomial(n, i, ring, q) * _power(ring, q, i * (i - 1)) * H[n - i]
            H.append(h)
        p = ring.zero
        for i in range(n + 1):
            p += qbinomial(n, i, ring, q) * _power(ring, q, i * i) * H[n - i]
        P.append(p)
    return P


@family('rr_ratio', params={'q': SYMBOLIC}, fields=('q',), pattern=lambda d, q: Pattern(
        's', 'alpha_k = -q^(k-1)', alpha=lambda k: -_power(d, q, k - 1)),
        describe='R(qt,q)/R(t,q), R(t,q) = sum q^(n(n-1)) t^n / (q;q)_n')
def rr_ratio_series(domain, order, q):
    if domain.kind == RATIONALS.kind:
        ring, qr = domain, q
    else:
        ring, qr = Q_RING, Q_RING.gen('q')
    coeffs = []
    for n, p in enumerate(_rr_polynomials(order, ring, qr)):
        num = domain.from_domain(p, ring)
        coeffs.append(domain.exact_div(num, qpochhammer(q, n, domain, q)))
    return TruncatedSeries(domain, coeffs)


def _rr_a_alpha(d, a, q, variant):
    def alpha(k):
        if variant == 'asymmetric':
            if k == 1:
                return d.exact_div(-d.one, d.one - a)
            den = (d.one - a * _power(d, q, k - 2)) * (d.one - a * _power(d, q, k - 1))
        else:
            den = (d.one - a * _power(d, q, k - 1)) * (d.one - a * _power(d, q, k))
        return d.exact_div(-_power(d, q, k - 1), den)
    return alpha


@family('rr_a_ratio', params={'a': '1/2', 'q': SYMBOLIC, 'variant': 'symmetric'},
        fields=('q',), numeric=('a',), choices={'variant': ('symmetric', 'asymmetric')},
        pattern=lambda d, a, q, variant: Pattern(
            's', ('alpha_k = -q^(k-1) / ((1 - a q^(k-1)) (1 - a q^k))' if variant == 'symmetric' else
                  'alpha_1 = -1/(1-a), alpha_k = -q^(k-1) / ((1 - a q^(k-2)) (1 - a q^(k-1)))'),
            alpha=_rr_a_alpha(d, a, q, variant)),
        describe='g_0/g_-1 of the family with (a q^(k+1); q)_n (symmetric) or (a q^k; q)_n (asymmetric)')
def rr_a_ratio_series(domain, order, a, q, variant):
    g0 = TruncatedSeries(domain, [rr_a_coefficient(domain, q, a, 0, n, variant)
                                  for n in range(order + 1)])
    gm1 = TruncatedSeries(domain, [rr_a_coefficient(domain, q, a, -1, n, variant)
                                   for n in range(order + 1)])
    return mul(g0, reciprocal(gm1))


@family('secant_power', params={'x': SYMBOLIC}, variable='u', pattern=lambda d, x: Pattern(
        's', 'alpha_n = n(x+n-1); in t: gamma = 0, beta_k = k(x+k-1)',
        alpha=lambda n: x * n + n * (n - 1),
        gamma=lambda k: d.zero, beta=lambda k: x * k + k * (k - 1)),
        describe='sum E_2n(x) u^n with sum E_2n(x) t^2n/(2n)! = (sec t)^x')
def secant_power_series(domain, order, x):
    sec = reciprocal(_cosine(domain, order))
    powered = exp0(log1(sec).scale(x))
    return TruncatedSeries(domain, [domain.rational_scale(c, factorial(2 * n))
                                    for n, c in enumerate(powered.coeffs)])


@family('moment_probe', params={'eps': '1'}, numeric=('eps',),
        describe='(1+eps) n! - eps/(n+1)^2, a Stieltjes moment sequence only for eps = 0')
def moment_probe_series(domain, order, eps):
    one = domain.one
    return TruncatedSeries(domain, [(one + eps) * factorial(n) - eps * domain.convert(Fraction(1, (n + 1) ** 2))
                                    for n in range(order + 1)])


@family('motzkin', pattern=lambda d: Pattern(
        'j', 'gamma_k = 1, beta_k = 1', gamma=lambda k: d.one, beta=lambda k: d.one),
        describe='Motzkin numbers')
def motzkin_series(domain, order):
    m = []
    for n in range(order + 1):
        if n < 2:
            m.append(1)
        else:
            m.append(m[n - 1] + sum(m[i] * m[n - 2 - i] for i in range(n - 1)))
    return TruncatedSeries(domain, [domain.convert(c) for c in m])


@family('catalan', pattern=lambda d: Pattern('s', 'alpha_k = 1', alpha=lambda k: d.one),
        describe='Catalan numbers')
def catalan_series(domain, order):
    return TruncatedSeries(domain, [domain.convert(comb(2 * n, n) // (n + 1)) for n in range(order + 1)])
