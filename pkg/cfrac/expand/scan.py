#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Stieltjes positivity scan

A moment sequence of a positive measure on [0, inf) has an S-fraction with
every alpha_n > 0; the scan reports the first alpha_n that is negative.
"""
from dataclasses import dataclass

from ..coeffs import RATIONAL
from ..exception import ArgumentError
from ..exception import PEncountered
from ..logger import SysLogger
from .refined import RefinedExpander
from .types import ExpansionShape


@dataclass(frozen=True)
class NegativeAlpha:
    n: int
    alpha: object
    found = True

    def as_dict(self, domain):
        return {'found': True, 'n': self.n, 'alpha': domain.encode(self.alpha)}


@dataclass(frozen=True)
class NoneFound:
    """every alpha the data determines is positive; ``status`` says why the scan stopped"""
    status: object
    checked: int
    found = False

    def as_dict(self, domain=None):
        return {'found': False, 'checked': self.checked, 'status': self.status.as_dict()}


def stieltjes_positivity_scan(a):
    """
    Run the refined C-fraction expansion of ``a`` one level at a time and stop
    at the first negative alpha_n.
    """
    domain = a.domain
    if domain.kind != RATIONAL:
        raise ArgumentError(f'positivity is only defined over the rationals, not {domain}')
    if not a[0] > 0:
        raise ArgumentError(f'a_0 must be positive, got {domain.encode(a[0])}')
    expander = RefinedExpander(a, ExpansionShape.cfraction())
    n = 0
    for term in expander.iter_terms():
        n += 1
        if term.p != 1:
            raise PEncountered(f'level {n} has p = {term.p}', level=n, p=term.p,
                               partial=expander.fraction())
        if term.alpha < 0:
            SysLogger.debug(f'first negative alpha at n = {n}')
            return NegativeAlpha(n, term.alpha)
    return NoneFound(expander.status, n)
