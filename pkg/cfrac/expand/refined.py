#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Refined (Euler-Viscovatov) expansion

Works on the series g_k with constant term 1 instead of the f_k, using

    g_k = alpha_k^{-1} t^{-p_k} (g_{k-1} - g_{k-2} - Delta_k g_{k-1})

so every level costs only linear coefficient operations. Delta_k is read off
1 - g_{k-2}/g_{k-1} through t^{M_k}, which needs a reciprocal of length
M_k + 1 only. g_k is known through N_k = N - (p_1 + ... + p_k).
"""
from ..exception import BadGMinus1
from ..exception import CFracError
from ..exception import DomainMismatch
from ..exception import InconsistentExtension
from ..exception import NonUnitConstantTerm
from ..exception import StrictShapeViolation
from ..logger import SysLogger
from ..series import TruncatedSeries
from ..series import convolve
from ..series import mul
from ..series import reciprocal
from .types import CFraction
from .types import CFTerm
from .types import ExpansionShape
from .types import GTable
from .types import Inconclusive
from .types import Terminated


def _first_difference(a, b):
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return n
    return None


class RefinedExpander(object):
    """
    Stateful driver of the refined algorithm.

    ``rows[k + 1]`` holds the coefficient list of g_k. The expander can be
    stepped one level at a time (``iter_terms``), run to the end (``run``) or
    rebuilt from a finished table and fed more coefficients (``resume``).
    """

    def __init__(self, f, shape=None, g_minus1=None):
        self.domain = domain = f.domain
        self.shape = shape or ExpansionShape.cfraction()
        self.custom_g = g_minus1 is not None
        if g_minus1 is None:
            g_minus1 = TruncatedSeries.one(domain, f.order)
        elif g_minus1.domain != domain:
            raise DomainMismatch(f'g_-1 is over {g_minus1.domain}, f over {domain}')
        if g_minus1[0] != domain.one:
            raise BadGMinus1(f'g_-1 must have constant term 1, not {domain.encode(g_minus1[0])}')
        alpha0 = f[0]
        if not domain.is_unit(alpha0):
            raise NonUnitConstantTerm(f'constant term {domain.encode(alpha0)} is not invertible',
                                      constant=domain.encode(alpha0))
        order = min(f.order, g_minus1.order)
        self.f = f.truncate(order)
        self.g_minus1 = g_minus1.truncate(order)
        self.alpha0 = alpha0
        div = domain.divider(alpha0)
        g0 = [div(c) for c in mul(self.g_minus1, self.f)]
        self.rows = [list(self.g_minus1.coeffs), g0]
        self.terms = []
        self.status = None
        self.tail_delta = ()
        SysLogger.debug(f'refined expansion over {domain}, order {order}, shape {self.shape.name}')

    # the level loop

    def step(self):
        """Determine the next level; returns the new CFTerm or None once finished."""
        if self.status is not None:
            return None
        domain = self.domain
        k = len(self.terms) + 1
        A = self.rows[k]      # g_{k-1}
        B = self.rows[k - 1]  # g_{k-2}
        budget = len(A) - 1
        M = self.shape.m(k)
        if budget <= M:
            self.status = Inconclusive(budget)
            SysLogger.debug(f'level {k}: budget {budget} exhausted (M = {M})')
            return None

        delta = self._delta(A, B, M)
        p = None
        for n in range(M + 1, budget + 1):
            if self._numerator(A, B, delta, n):
                p = n
                break
        if p is None:
            self.status = Terminated(k - 1, budget)
            self.tail_delta = tuple(delta)
            SysLogger.debug(f'level {k}: alpha vanishes through t^{budget}, terminated')
            return None

        required = self.shape.required_p(k)
        if required is not None and p != required:
            raise StrictShapeViolation(f'level {k} has p = {p}, the shape requires p = {required}',
                                       level=k, p=p, required=required, partial=self.fraction())
        alpha = self._numerator(A, B, delta, p)
        try:
            div = domain.divider(alpha)
            row = [domain.one]
            for n in range(p + 1, budget + 1):
                row.append(div(self._numerator(A, B, delta, n)))
        except CFracError as e:
            e.data.setdefault('partial', self.fraction())
            e.data.setdefault('level', k)
            raise
        term = CFTerm(tuple(delta), alpha, p)
        self.terms.append(term)
        self.rows.append(row)
        return term

    def _delta(self, A, B, M):
        """coefficients 1..M of 1 - B/A"""
        if not M:
            return []
        inv = reciprocal(TruncatedSeries(self.domain, A[:M + 1])).coeffs
        zero = self.domain.zero
        return [-convolve(B, inv, j, zero) for j in range(1, M + 1)]

    @staticmethod
    def _numerator(A, B, delta, n):
        """coefficient n of g_{k-1} - g_{k-2} - Delta_k g_{k-1}"""
        h = A[n] - B[n]
        for j, d in enumerate(delta, 1):
            if j > n:
                break
            if d:
                h -= d * A[n - j]
        return h

    def iter_terms(self):
        while True:
            term = self.step()
            if term is None:
                return
            yield term

    def run(self):
        for _ in self.iter_terms():
            pass
        return self

    # results

    def remainder(self):
        """f_K = g_K / g_{K-1} through N_K"""
        K = len(self.terms)
        top = self.rows[K + 1]
        below = TruncatedSeries(self.domain, self.rows[K][:len(top)])
        return mul(TruncatedSeries(self.domain, top), reciprocal(below)).coeffs

    def fraction(self):
        status = self.status
        remainder = ()
        if status is None:
            status = Inconclusive(len(self.rows[-1]) - 1)
        elif isinstance(status, Inconclusive):
            remainder = self.remainder()
        return CFraction(self.domain, self.alpha0, tuple(self.terms), status,
                         tail_delta=self.tail_delta, remainder=remainder)

    def table(self):
        return GTable(self.domain, tuple(tuple(r) for r in self.rows), self.f, self.shape,
                      g_minus1=self.g_minus1 if self.custom_g else None,
                      alpha0=self.alpha0, terms=tuple(self.terms))

    # extension

    @classmethod
    def resume(cls, table, f, g_minus1=None):
        """
        Rebuild the expander of ``table`` and grow every stored row to the
        order of the longer input ``f``; the level loop then continues where
        it stopped.
        """
        domain = table.domain
        if f.domain != domain:
            raise DomainMismatch(f'extension is over {f.domain}, the table over {domain}')
        old = table.f
        if f.order < old.order:
            raise InconsistentExtension(f'extension has order {f.order} below the original {old.order}')
        n = _first_difference(old.coeffs, f.coeffs)
        if n is not None:
            raise InconsistentExtension(f'coefficient of t^{n} changed', index=n,
                                        old=domain.encode(old[n]), new=domain.encode(f[n]))
        if table.g_minus1 is None:
            if g_minus1 is None:
                g_minus1 = TruncatedSeries.one(domain, f.order)
            elif any(g_minus1.coeffs[1:]) or g_minus1[0] != domain.one:
                raise InconsistentExtension('g_-1 was the constant 1 and cannot change')
        else:
            if g_minus1 is None:
                raise BadGMinus1('a custom g_-1 must be extended together with f')
            n = _first_difference(table.g_minus1.coeffs, g_minus1.coeffs)
            if n is not None or g_minus1.order < table.g_minus1.order:
                raise InconsistentExtension(f'g_-1 changed at t^{n}', index=n)

        self = cls.__new__(cls)
        self.domain = domain
        self.shape = table.shape
        self.custom_g = table.g_minus1 is not None
        order = min(f.order, g_minus1.order)
        self.f = f.truncate(order)
        self.g_minus1 = g_minus1.truncate(order)
        self.alpha0 = table.alpha0
        self.terms = list(table.terms)
        self.status = None
        self.tail_delta = ()
        self.rows = [list(r) for r in table.rows]
        self._grow(order)
        SysLogger.debug(f'resumed refined expansion at level {len(self.terms) + 1}, order {order}')
        return self

    def _grow(self, order):
        domain = self.domain
        zero = domain.zero
        self.rows[0] = list(self.g_minus1.coeffs)
        div0 = domain.divider(self.alpha0)
        g0 = self.rows[1]
        for n in range(len(g0), order + 1):
            g0.append(div0(convolve(self.g_minus1.coeffs, self.f.coeffs, n, zero)))
        budget = order
        for k, term in enumerate(self.terms, 1):
            A, B, row = self.rows[k], self.rows[k - 1], self.rows[k + 1]
            budget -= term.p
            div = domain.divider(term.alpha)
            for n in range(len(row), budget + 1):
                row.append(div(self._numerator(A, B, term.delta, n + term.p)))


def expand_refined(f, shape=None, g_minus1=None):
    """
    Expand ``f`` with the refined algorithm; returns ``(CFraction, GTable)``.

    ``g_minus1`` is any series with constant term 1 (default: the constant 1);
    the g-table then holds g_k with f_k = g_k / g_{k-1}.
    """
    expander = RefinedExpander(f, shape, g_minus1).run()
    return expander.fraction(), expander.table()


def extend(table, f, g_minus1=None):
    """
    Continue a refined expansion on more coefficients of the same series;
    gives the same ``(CFraction, GTable)`` as a fresh run on ``f``.
    """
    expander = RefinedExpander.resume(table, f, g_minus1).run()
    return expander.fraction(), expander.table()
