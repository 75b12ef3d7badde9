#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Value types shared by the expansion algorithms

    f(t) = alpha0 / (1 - Delta_1(t) - alpha_1 t^{p_1} / (1 - Delta_2(t) - alpha_2 t^{p_2} / (1 - ...)))

with Delta_k(t) = delta_k^(1) t + ... + delta_k^(M_k) t^{M_k} and p_k >= M_k + 1.
"""
from dataclasses import dataclass
from dataclasses import field
from typing import Optional
from typing import Tuple

from ..exception import ArgumentError
from ..series import TruncatedSeries


def _tail(seq, k):
    """k-th entry (1-based) of a list whose last entry repeats forever"""
    return seq[min(k, len(seq)) - 1]


class ExpansionShape(object):
    """
    The M sequence of the expansion plus, optionally, the p_k every level must have.

    Both lists are finite; the last listed entry repeats for all later levels.
    """

    def __init__(self, M=(0,), strict_p=None, name='custom'):
        M = tuple(int(m) for m in M)
        if not M:
            raise ArgumentError('the M sequence needs at least one entry')
        if any(m < 0 for m in M):
            raise ArgumentError(f'M entries must be >= 0, got {M}')
        if strict_p is not None:
            strict_p = tuple(int(p) for p in strict_p)
            if not strict_p:
                raise ArgumentError('strict_p needs at least one entry')
            for k in range(1, max(len(M), len(strict_p)) + 1):
                if _tail(strict_p, k) < _tail(M, k) + 1:
                    raise ArgumentError(f'required p_{k} = {_tail(strict_p, k)} '
                                        f'is below M_{k} + 1 = {_tail(M, k) + 1}')
        self.M = M
        self.strict_p = strict_p
        self.name = name

    @classmethod
    def cfraction(cls):
        """regular C-fraction: no Delta, p found by the algorithm"""
        return cls((0,), name='c')

    @classmethod
    def sfraction(cls):
        return cls((0,), (1,), name='s')

    @classmethod
    def jfraction(cls):
        return cls((1,), (2,), name='j')

    @classmethod
    def parse(cls, text):
        """'c', 's', 'j' or 'custom:<M list>' as used on the command line"""
        text = (text or 'c').strip().lower()
        if text in ('c', 'cfraction'):
            return cls.cfraction()
        if text in ('s', 'sfraction'):
            return cls.sfraction()
        if text in ('j', 'jfraction'):
            return cls.jfraction()
        if text.startswith('custom:'):
            try:
                M = [int(m) for m in text[len('custom:'):].split(',') if m.strip()]
            except ValueError:
                raise ArgumentError(f'bad M list in shape {text!r}')
            return cls(M)
        raise ArgumentError(f'unknown shape {text!r}, expected c, s, j or custom:<M list>')

    def m(self, k):
        return _tail(self.M, k)

    def required_p(self, k):
        if self.strict_p is None:
            return None
        return _tail(self.strict_p, k)

    def as_dict(self):
        return {'name': self.name, 'M': list(self.M),
                'strict_p': list(self.strict_p) if self.strict_p is not None else None}

    @classmethod
    def from_dict(cls, data):
        return cls(data.get('M', (0,)), data.get('strict_p'), data.get('name', 'custom'))

    def __eq__(self, other):
        return (isinstance(other, ExpansionShape) and self.M == other.M
                and self.strict_p == other.strict_p)

    def __hash__(self):
        return hash((self.M, self.strict_p))

    def __repr__(self):
        return f'<ExpansionShape {self.name} M={self.M} strict_p={self.strict_p}>'


@dataclass(frozen=True)
class CFTerm:
    delta: Tuple
    alpha: object
    p: int

    def __post_init__(self):
        if self.p < len(self.delta) + 1:
            raise ArgumentError(f'p = {self.p} but Delta has degree {len(self.delta)}')


@dataclass(frozen=True)
class Terminated:
    """alpha_{k+1} = 0, witnessed through ``witness`` further coefficients"""
    k: int
    witness: int
    kind = 'terminated'

    def as_dict(self):
        return {'kind': self.kind, 'k': self.k, 'witness': self.witness}


@dataclass(frozen=True)
class Inconclusive:
    """the order budget ran out before the next term was fixed"""
    remaining: int
    kind = 'inconclusive'

    def as_dict(self):
        return {'kind': self.kind, 'remaining': self.remaining}


@dataclass(frozen=True)
class CFraction:
    domain: object
    alpha0: object
    terms: Tuple[CFTerm, ...]
    status: object
    # Delta of the level whose alpha vanished (Terminated only)
    tail_delta: Tuple = ()
    # f_K = g_K / g_{K-1} through the remaining budget (Inconclusive only)
    remainder: Tuple = ()

    def __post_init__(self):
        if not self.alpha0:
            raise ArgumentError('alpha0 must be nonzero')
        if isinstance(self.status, Terminated) and self.status.k != len(self.terms):
            raise ArgumentError(f'Terminated({self.status.k}) with {len(self.terms)} terms')

    @property
    def alphas(self):
        return [term.alpha for term in self.terms]

    @property
    def terminated(self):
        return isinstance(self.status, Terminated)

    def determined_order(self):
        """highest t power fixed by the stored data; None when terminated (all of them)"""
        if self.terminated:
            return None
        extra = len(self.remainder) - 1 if self.remainder else 0
        return sum(term.p for term in self.terms) + extra

    def encode_terms(self):
        enc = self.domain.encode
        return [{'delta': [enc(d) for d in t.delta], 'alpha': enc(t.alpha), 'p': t.p}
                for t in self.terms]


@dataclass(frozen=True)
class GTable:
    """
    Rows g_{-1}, g_0, ..., g_K of the refined algorithm, each through its own
    remaining order N_k, together with what is needed to extend them later.
    """
    domain: object
    rows: Tuple[Tuple, ...]
    f: TruncatedSeries
    shape: ExpansionShape
    g_minus1: Optional[TruncatedSeries] = None
    alpha0: object = None
    terms: Tuple[CFTerm, ...] = field(default=())

    @property
    def levels(self):
        """K, the last k with a stored row"""
        return len(self.rows) - 2

    def row(self, k):
        if not -1 <= k <= self.levels:
            raise IndexError(f'no row g_{k}; rows run from g_-1 to g_{self.levels}')
        return TruncatedSeries(self.domain, self.rows[k + 1])

    def entry(self, k, n):
        return self.rows[k + 1][n]

    def order(self, k):
        return len(self.rows[k + 1]) - 1
