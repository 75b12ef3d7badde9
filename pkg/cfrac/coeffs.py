#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exact coefficient domains

Three kinds of domain are supported, each a thin wrapper over a sympy domain:

    RationalField              QQ
    RationalFunctionField(q)   QQ(q), one variable
    PolynomialRing(x, y, ...)  QQ[x, y, ...], lex order in the declared order

Elements are the raw sympy domain elements (``PythonMPQ``/``mpq``,
``FracElement``, ``PolyElement``); they are immutable and canonical, so ``==``
is value equality. The hot loops of the expansion code use the elements'
operators directly; the checked methods here are for everything else.
"""
import re
from fractions import Fraction
from tokenize import TokenError

import sympy
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.polyerrors import ExactQuotientFailed

from .exception import ArgumentError
from .exception import DivisionByZero
from .exception import DomainMismatch
from .exception import NonExactDivision
from .exception import ParseError


_NAME_RE = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')

RATIONAL = 'rational'
RATIONAL_FUNCTION = 'rational_function'
POLYNOMIAL = 'polynomial'


def to_rational(r):
    """int, Fraction, 'p/q' text or a QQ element -> QQ element"""
    if QQ.of_type(r):
        return r
    if isinstance(r, bool):
        raise ArgumentError(f'not a rational number: {r!r}')
    if isinstance(r, int):
        return QQ(r)
    if isinstance(r, str):
        try:
            r = Fraction(r.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f'not a rational number: {r!r}')
    if isinstance(r, Fraction):
        return QQ(r.numerator, r.denominator)
    if isinstance(r, sympy.Rational):
        return QQ(int(r.p), int(r.q))
    raise ArgumentError(f'not a rational number: {r!r}')


def _check_names(names):
    names = tuple(names)
    if not names:
        raise ArgumentError('a symbolic domain needs at least one variable')
    for name in names:
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise ArgumentError(f'bad variable name {name!r}')
    if len(set(names)) != len(names):
        raise ArgumentError(f'variable names must be distinct: {names}')
    return names


class CoeffDomain(object):
    """Common behaviour of the three coefficient domains"""
    kind = None
    is_field = True

    def __init__(self, dom, variables=()):
        self.dom = dom
        self.variables = tuple(variables)
        self.zero = dom.zero
        self.one = dom.one
        self._symbols = {name: sympy.Symbol(name) for name in self.variables}

    # identity

    @property
    def descriptor(self):
        raise NotImplementedError

    def _key(self):
        return (self.kind, self.variables)

    def __eq__(self, other):
        return isinstance(other, CoeffDomain) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f'<{type(self).__name__} {self}>'

    # elements

    def contains(self, x):
        return self.dom.of_type(x)

    def check(self, *xs):
        for x in xs:
            if not self.dom.of_type(x):
                raise DomainMismatch(f'{x!r} is not an element of {self}',
                                     domain=self.descriptor)

    def convert(self, value):
        """Bring ints, Fractions, text, sympy expressions or QQ elements into the domain"""
        if self.dom.of_type(value):
            return value
        if isinstance(value, str):
            return self.parse(value)
        if QQ.of_type(value) or isinstance(value, (int, Fraction)):
            return self.dom.convert_from(to_rational(value), QQ)
        if isinstance(value, sympy.Basic):
            try:
                return self.dom.from_sympy(value)
            except (CoercionFailed, ValueError, TypeError) as e:
                raise ParseError(f'{value} is not an element of {self}: {e}')
        raise DomainMismatch(f'{value!r} cannot be converted into {self}',
                             domain=self.descriptor)

    def from_domain(self, x, other):
        """an element of the CoeffDomain ``other`` brought into this one"""
        if other == self:
            return x
        try:
            return self.dom.convert_from(x, other.dom)
        except CoercionFailed as e:
            raise DomainMismatch(f'cannot bring {other.encode(x)} from {other} into {self}: {e}',
                                 domain=self.descriptor)

    def gen(self, name):
        try:
            return self.dom.gens[self.variables.index(name)]
        except ValueError:
            raise ArgumentError(f'{self} has no variable {name!r}')

    def is_zero(self, x):
        return not x

    def is_unit(self, x):
        return bool(x)

    def series_unit(self, x):
        """constant terms a truncated series may be inverted at"""
        return self.is_unit(x)

    # arithmetic

    def add(self, x, y):
        self.check(x, y)
        return x + y

    def sub(self, x, y):
        self.check(x, y)
        return x - y

    def mul(self, x, y):
        self.check(x, y)
        return x * y

    def neg(self, x):
        self.check(x)
        return -x

    def exact_div(self, x, y):
        self.check(x, y)
        if not y:
            raise DivisionByZero(f'division of {self.encode(x)} by zero')
        return x / y

    def divider(self, y):
        """a function dividing by the fixed nonzero element ``y``"""
        if not y:
            raise DivisionByZero('division by zero')
        inv = self.one / y
        return lambda x: x * inv

    def rational_scale(self, x, r):
        return x * to_rational(r)

    # text

    def encode(self, x):
        return str(self.dom.to_sympy(x)).replace('**', '^')

    def parse(self, text):
        if not isinstance(text, str):
            raise ParseError(f'expected text, got {text!r}')
        source = text.strip().replace('^', '**')
        if not source:
            raise ParseError('empty coefficient')
        try:
            expr = parse_expr(source, local_dict=dict(self._symbols))
            return self.dom.from_sympy(sympy.sympify(expr))
        except (CoercionFailed, ExactQuotientFailed, SyntaxError, TypeError,
                ValueError, ZeroDivisionError, TokenError,
                sympy.SympifyError) as e:
            raise ParseError(f'cannot read {text!r} in {self}: {e}')

    def to_sympy(self, x):
        return self.dom.to_sympy(x)

    def substitute(self, x, /, **values):
        """Evaluate at rational values of every variable, giving a QQ element"""
        expr = self.dom.to_sympy(x)
        subs = {}
        for name, v in values.items():
            if name not in self._symbols:
                raise ArgumentError(f'{self} has no variable {name!r}')
            r = to_rational(v)
            subs[self._symbols[name]] = sympy.Rational(int(r.numerator), int(r.denominator))
        value = expr.subs(subs)
        if not value.is_Rational:
            raise ArgumentError(f'{self.encode(x)} is not constant after substituting {values}')
        return to_rational(value)

    def size(self, x):
        """bit size (numbers) or total degree (symbolic values)"""
        raise NotImplementedError


class RationalField(CoeffDomain):
    kind = RATIONAL

    def __init__(self):
        super(RationalField, self).__init__(QQ)

    @property
    def descriptor(self):
        return {'kind': RATIONAL}

    def __str__(self):
        return 'QQ'

    def convert(self, value):
        if QQ.of_type(value):
            return value
        if isinstance(value, (int, Fraction, str)) and not isinstance(value, bool):
            return to_rational(value)
        return super(RationalField, self).convert(value)

    def parse(self, text):
        try:
            return to_rational(text)
        except ParseError:
            return super(RationalField, self).parse(text)

    def encode(self, x):
        if x.denominator == 1:
            return str(x.numerator)
        return f'{x.numerator}/{x.denominator}'

    def size(self, x):
        return max(int(x.numerator).bit_length(), int(x.denominator).bit_length())


class RationalFunctionField(CoeffDomain):
    kind = RATIONAL_FUNCTION

    def __init__(self, variable):
        variable, = _check_names([variable])
        super(RationalFunctionField, self).__init__(
            QQ.frac_field(sympy.Symbol(variable)), (variable,))

    @property
    def variable(self):
        return self.variables[0]

    @property
    def descriptor(self):
        return {'kind': RATIONAL_FUNCTION, 'variable': self.variable}

    def __str__(self):
        return f'QQ({self.variable})'

    def encode(self, x):
        """numerator over a monic denominator; a denominator of 1 is left out"""
        lc = x.denom.LC
        numer = str(x.numer.quo_ground(lc).as_expr()).replace('**', '^')
        denom = x.denom.monic()
        if denom == denom.ring.one:
            return numer
        denom = str(denom.as_expr()).replace('**', '^')
        return f'({numer})/({denom})'

    def size(self, x):
        return max(x.numer.degree(), x.denom.degree(), 0)


class PolynomialRing(CoeffDomain):
    kind = POLYNOMIAL
    is_field = False

    def __init__(self, *variables):
        if len(variables) == 1 and not isinstance(variables[0], str):
            variables = tuple(variables[0])
        variables = _check_names(variables)
        symbols = [sympy.Symbol(name) for name in variables]
        super(PolynomialRing, self).__init__(
            QQ.poly_ring(*symbols, order=lex), variables)

    @property
    def descriptor(self):
        return {'kind': POLYNOMIAL, 'variables': list(self.variables)}

    def __str__(self):
        return 'QQ[%s]' % ','.join(self.variables)

    def is_unit(self, x):
        return bool(x) and x.is_ground

    def series_unit(self, x):
        return x == self.one

    def exact_div(self, x, y):
        self.check(x, y)
        if not y:
            raise DivisionByZero(f'division of {self.encode(x)} by zero')
        try:
            return x.exquo(y)
        except ExactQuotientFailed:
            raise NonExactDivision(f'{self.encode(y)} does not divide {self.encode(x)}',
                                   dividend=self.encode(x), divisor=self.encode(y))

    def divider(self, y):
        if not y:
            raise DivisionByZero('division by zero')
        if y.is_ground:
            inv = QQ.one / y.LC
            return lambda x: x.mul_ground(inv)

        def _div(x):
            try:
                return x.exquo(y)
            except ExactQuotientFailed:
                raise NonExactDivision(f'{self.encode(y)} does not divide {self.encode(x)}',
                                       dividend=self.encode(x), divisor=self.encode(y))
        return _div

    def size(self, x):
        return max((sum(m) for m in x.monoms()), default=0)


RATIONALS = RationalField()


def domain_from_descriptor(descriptor):
    """inverse of ``CoeffDomain.descriptor``"""
    if not isinstance(descriptor, dict):
        raise ArgumentError(f'bad domain descriptor {descriptor!r}')
    kind = descriptor.get('kind')
    if kind == RATIONAL:
        return RATIONALS
    if kind == RATIONAL_FUNCTION:
        return RationalFunctionField(descriptor.get('variable', ''))
    if kind == POLYNOMIAL:
        return PolynomialRing(*descriptor.get('variables', ()))
    raise ArgumentError(f'unknown domain kind {kind!r}')


def domain_for(symbolic=(), field_variable=None):
    """
    The smallest supported domain for the given symbolic names: QQ when there
    are none, QQ(q) when ``field_variable`` is set, else QQ[names]
    """
    if field_variable:
        return RationalFunctionField(field_variable)
    if symbolic:
        return PolynomialRing(*symbolic)
    return RATIONALS
