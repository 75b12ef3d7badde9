#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Primitive expansion

Iterates f_k = alpha_k^{-1} t^{-p_k} (1 - 1/f_{k-1} - Delta_k) on the f_k
themselves, one full series reciprocal per level. Kept as the reference
algorithm and the baseline of the benchmark.
"""
from ..exception import CFracError
from ..exception import NonUnitConstantTerm
from ..exception import StrictShapeViolation
from ..logger import SysLogger
from ..series import TruncatedSeries
from ..series import reciprocal
from .types import CFraction
from .types import CFTerm
from .types import ExpansionShape
from .types import Inconclusive
from .types import Terminated


def expand_primitive(f, shape=None):
    domain = f.domain
    shape = shape or ExpansionShape.cfraction()
    alpha0 = f[0]
    if not domain.is_unit(alpha0):
        raise NonUnitConstantTerm(f'constant term {domain.encode(alpha0)} is not invertible',
                                  constant=domain.encode(alpha0))
    SysLogger.debug(f'primitive expansion over {domain}, order {f.order}, shape {shape.name}')
    fk = f.map(domain.divider(alpha0))
    terms = []

    def _partial():
        return CFraction(domain, alpha0, tuple(terms), Inconclusive(fk.order))

    k = 1
    while True:
        budget = fk.order
        M = shape.m(k)
        if budget <= M:
            return CFraction(domain, alpha0, tuple(terms), Inconclusive(budget),
                             remainder=fk.coeffs)
        # u = 1 - 1/f_{k-1}
        u = [-c for c in reciprocal(fk).coeffs]
        u[0] = domain.zero
        delta = tuple(u[1:M + 1])
        p = next((n for n in range(M + 1, budget + 1) if u[n]), None)
        if p is None:
            return CFraction(domain, alpha0, tuple(terms), Terminated(k - 1, budget),
                             tail_delta=delta)
        required = shape.required_p(k)
        if required is not None and p != required:
            raise StrictShapeViolation(f'level {k} has p = {p}, the shape requires p = {required}',
                                       level=k, p=p, required=required, partial=_partial())
        alpha = u[p]
        try:
            div = domain.divider(alpha)
            fk = TruncatedSeries(domain, [domain.one] + [div(c) for c in u[p + 1:]])
        except CFracError as e:
            e.data.setdefault('partial', _partial())
            e.data.setdefault('level', k)
            raise
        terms.append(CFTerm(delta, alpha, p))
        k += 1
