#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
From continued fractions back to series, and between the classical forms
"""
from ..exception import InsufficientDepth
from ..exception import ShapeMismatch
from ..series import TruncatedSeries
from ..series import reciprocal
from .types import CFraction
from .types import CFTerm
from .types import Inconclusive
from .types import Terminated


def _level_denominator(domain, term, inner, order):
    """1 - Delta_k - alpha_k t^{p_k} f_k through t^order"""
    coeffs = [domain.one] + [domain.zero] * order
    for j, d in enumerate(term.delta, 1):
        if j > order:
            break
        coeffs[j] -= d
    if inner is not None:
        for n in range(term.p, order + 1):
            c = inner[n - term.p]
            if c:
                coeffs[n] -= term.alpha * c
    return TruncatedSeries(domain, coeffs)


def _polynomial_reciprocal(domain, delta, order):
    """1/(1 - Delta(t)) through t^order"""
    coeffs = [domain.one] + [domain.zero] * order
    for j, d in enumerate(delta, 1):
        if j > order:
            break
        coeffs[j] -= d
    return reciprocal(TruncatedSeries(domain, coeffs))


def cf_to_series(cf, N):
    """
    Evaluate the fraction bottom-up through t^N.

    The innermost level is 1/(1 - tail Delta) for a terminated fraction, the
    stored remainder for an inconclusive one (the constant 1 if none was kept).
    """
    domain = cf.domain
    limit = cf.determined_order()
    if limit is not None and N > limit:
        raise InsufficientDepth(f'the fraction fixes the series through t^{limit} only, not t^{N}',
                                limit=limit, requested=N)
    terms = cf.terms
    need = [N]
    for term in terms:
        need.append(need[-1] - term.p)

    # the deepest level that still reaches t^N
    level = len(terms)
    while level > 0 and need[level] < 0:
        level -= 1

    if level < len(terms):
        fk = _polynomial_reciprocal(domain, terms[level].delta, need[level])
    elif cf.terminated:
        fk = _polynomial_reciprocal(domain, cf.tail_delta, need[level])
    elif cf.remainder:
        fk = TruncatedSeries(domain, cf.remainder[:need[level] + 1])
    else:
        fk = TruncatedSeries.one(domain, need[level])

    for k in range(level, 0, -1):
        den = _level_denominator(domain, terms[k - 1], fk, need[k - 1])
        fk = reciprocal(den)
    return fk.scale(cf.alpha0)


def as_sfraction(cf):
    """alpha_1, alpha_2, ... of an expansion with every M = 0 and p = 1"""
    for k, term in enumerate(cf.terms, 1):
        if term.delta or term.p != 1:
            raise ShapeMismatch(f'level {k} has M = {len(term.delta)}, p = {term.p}; '
                                'an S-fraction needs M = 0 and p = 1', level=k)
    if any(cf.tail_delta):
        raise ShapeMismatch('the terminating level has a nonzero Delta')
    return cf.alphas


def as_jfraction(cf):
    """
    (gammas, betas) of an expansion with every M = 1 and p = 2:
    gamma_k = delta_{k+1}^(1) and beta_k = alpha_k
    """
    for k, term in enumerate(cf.terms, 1):
        if len(term.delta) != 1 or term.p != 2:
            raise ShapeMismatch(f'level {k} has M = {len(term.delta)}, p = {term.p}; '
                                'a J-fraction needs M = 1 and p = 2', level=k)
    gammas = [term.delta[0] for term in cf.terms]
    if cf.terminated:
        if len(cf.tail_delta) > 1:
            raise ShapeMismatch('the terminating level has a Delta of degree above one')
        gammas.append(cf.tail_delta[0] if cf.tail_delta else cf.domain.zero)
    return gammas, cf.alphas


def contract_s_to_j(alphas):
    """
    gamma_0 = alpha_1, gamma_n = alpha_{2n} + alpha_{2n+1}, beta_n = alpha_{2n-1} alpha_{2n},
    for every index the given alphas reach
    """
    a = [None] + list(alphas)
    L = len(alphas)
    gammas = []
    if L >= 1:
        gammas.append(a[1])
    n = 1
    while 2 * n + 1 <= L:
        gammas.append(a[2 * n] + a[2 * n + 1])
        n += 1
    betas = [a[2 * n - 1] * a[2 * n] for n in range(1, L // 2 + 1)]
    return gammas, betas


def sfraction(domain, alphas, alpha0=None, terminated=False):
    """the CFraction alpha0 / (1 - alpha_1 t / (1 - alpha_2 t / ...))"""
    alpha0 = domain.one if alpha0 is None else domain.convert(alpha0)
    terms = tuple(CFTerm((), domain.convert(a), 1) for a in alphas)
    status = Terminated(len(terms), 0) if terminated else Inconclusive(0)
    return CFraction(domain, alpha0, terms, status)


def jfraction(domain, gammas, betas, alpha0=None):
    """
    The CFraction alpha0 / (1 - gamma_0 t - beta_1 t^2 / (1 - gamma_1 t - ...)) with
    len(betas) levels; it determines the series through t^(2 len(betas)), or one
    order more when a gamma for the innermost level is given.
    """
    alpha0 = domain.one if alpha0 is None else domain.convert(alpha0)
    terms = tuple(CFTerm((domain.convert(g),), domain.convert(b), 2)
                  for g, b in zip(gammas, betas))
    remainder = (domain.one,)
    if len(gammas) > len(betas):
        remainder = (domain.one, domain.convert(gammas[len(betas)]))
    return CFraction(domain, alpha0, terms, Inconclusive(len(remainder) - 1), remainder=remainder)
