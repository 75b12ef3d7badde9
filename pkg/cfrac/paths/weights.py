#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Step weights of Motzkin and Dyck paths

A rise from height i weighs a_i (1 unless given), a fall from height i weighs
beta_i (Motzkin) or alpha_i (Dyck), a level step at height i weighs gamma_i.
Each weight family is a finite sequence or a callable of the index.
"""
from ..coeffs import PolynomialRing
from ..exception import ArgumentError
from ..exception import IndexOutOfRange

MOTZKIN = 'motzkin'
DYCK = 'dyck'
MODES = (MOTZKIN, DYCK)


class _Family(object):
    """weights w_first, w_first+1, ... from a sequence or a callable"""

    def __init__(self, domain, name, values, first):
        self.domain = domain
        self.name = name
        self.first = first
        if callable(values):
            self._func = values
            self._values = None
        else:
            self._func = None
            self._values = tuple(domain.convert(v) for v in values)
        self._cache = {}

    def __call__(self, i):
        if i < self.first:
            raise IndexOutOfRange(f'{self.name}_{i} does not exist; indices start at {self.first}')
        if self._values is not None:
            if i - self.first >= len(self._values):
                raise IndexOutOfRange(f'{self.name}_{i} is not given; only '
                                      f'{self.name}_{self.first}..{self.name}_{self.first + len(self._values) - 1}',
                                      name=self.name, index=i)
            return self._values[i - self.first]
        if i not in self._cache:
            self._cache[i] = self.domain.convert(self._func(i))
        return self._cache[i]

    def available(self, i):
        """whether index i can be looked up"""
        return i >= self.first and (self._values is None or i - self.first < len(self._values))

    def values(self, last):
        return [self(i) for i in range(self.first, last + 1)]


class PathWeights(object):

    def __init__(self, domain, mode, falls, levels=None, rises=None):
        if mode not in MODES:
            raise ArgumentError(f'unknown path mode {mode!r}')
        self.domain = domain
        self.mode = mode
        self._falls = _Family(domain, 'beta' if mode == MOTZKIN else 'alpha', falls, 1)
        self._levels = _Family(domain, 'gamma', levels, 0) if levels is not None else None
        self._rises = _Family(domain, 'a', rises, 0) if rises is not None else None

    @classmethod
    def motzkin(cls, domain, betas, gammas, rises=None):
        return cls(domain, MOTZKIN, betas, gammas, rises)

    @classmethod
    def dyck(cls, domain, alphas, rises=None):
        return cls(domain, DYCK, alphas, None, rises)

    @classmethod
    def symbolic(cls, mode, size, rises=False):
        """
        Weights that are fresh indeterminates over QQ: a0.. for rises (when
        ``rises``), b1.. for falls and c0.. for level steps, indices below ``size``
        """
        names = [f'b{i}' for i in range(1, size + 1)]
        if mode == MOTZKIN:
            names += [f'c{i}' for i in range(size + 1)]
        if rises:
            names += [f'a{i}' for i in range(size + 1)]
        domain = PolynomialRing(*names)
        gen = domain.gen
        falls = [gen(f'b{i}') for i in range(1, size + 1)]
        levels = [gen(f'c{i}') for i in range(size + 1)] if mode == MOTZKIN else None
        ups = [gen(f'a{i}') for i in range(size + 1)] if rises else None
        return cls(domain, mode, falls, levels, ups)

    def rise(self, i):
        return self._rises(i) if self._rises is not None else self.domain.one

    def fall(self, i):
        return self._falls(i)

    def level(self, i):
        if self._levels is None:
            return self.domain.zero
        return self._levels(i)

    def beta(self, i):
        if self.mode != MOTZKIN:
            raise ArgumentError('Dyck weights have alphas, not betas')
        return self._falls(i)

    def gamma(self, i):
        if self.mode != MOTZKIN:
            raise ArgumentError('Dyck weights have no level steps')
        return self._levels(i)

    def alpha(self, i):
        if self.mode != DYCK:
            raise ArgumentError('Motzkin weights have betas and gammas, not alphas')
        return self._falls(i)

    def effective_fall(self, i):
        """a_{i-1} times the fall weight: the coefficient the continued fraction sees"""
        if self._rises is None:
            return self._falls(i)
        return self._rises(i - 1) * self._falls(i)

    def has_fall(self, i):
        return self._falls.available(i) and (self._rises is None or self._rises.available(i - 1))

    def shifted(self, j):
        """the weights seen from height j: index i becomes i + j"""
        falls = self._falls
        levels = self._levels
        rises = self._rises
        return PathWeights(
            self.domain, self.mode,
            lambda i: falls(i + j),
            (lambda i: levels(i + j)) if levels is not None else None,
            (lambda i: rises(i + j)) if rises is not None else None)

    def jfraction_weights(self):
        """(gamma, beta) index functions of the J-fraction in t counting these paths"""
        return self.level, self.effective_fall

    def __repr__(self):
        return f'<PathWeights {self.mode} over {self.domain}>'
