#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
q-binomials and q-shifted factorials

q is either the generator of QQ[q] / QQ(q) or a rational number; every
function takes the domain and the value of q explicitly.
"""
from ..coeffs import PolynomialRing
from ..config import settings
from ..exception import ArgumentError
from ..exception import IndexOutOfRange
from ..logger import SysLogger
from ..utils import LockedMemo

Q_RING = PolynomialRing('q')

# rows of q-Pascal triangles keyed by (domain, q, recurrence, n)
_rows = LockedMemo('qbinomial', settings.limits.qbinomial_cache)


def _default_q(domain, q):
    domain = domain or Q_RING
    if q is None:
        q = domain.gen('q')
    return domain, domain.convert(q)


def _power(domain, q, e):
    out = domain.one
    for _ in range(e):
        out *= q
    return out


def _pascal_row(domain, q, recurrence, n):
    """row n of the q-Pascal triangle, built from row n-1"""
    if n == 0:
        return (domain.one,)
    prev = _row(domain, q, recurrence, n - 1)
    row = [domain.one]
    for k in range(1, n):
        if recurrence == 1:
            # [n, k] = [n-1, k-1] + q^k [n-1, k]
            row.append(prev[k - 1] + _power(domain, q, k) * prev[k])
        else:
            # [n, k] = q^{n-k} [n-1, k-1] + [n-1, k]
            row.append(_power(domain, q, n - k) * prev[k - 1] + prev[k])
    row.append(domain.one)
    return tuple(row)


def _row(domain, q, recurrence, n):
    # rows are filled bottom-up so the memo never recurses deeply
    start = n
    while start > 0 and (domain, q, recurrence, start - 1) not in _rows:
        start -= 1
    for m in range(start, n):
        _rows.get_or_compute((domain, q, recurrence, m),
                             lambda m=m: _pascal_row(domain, q, recurrence, m))
    return _rows.get_or_compute((domain, q, recurrence, n),
                                lambda: _pascal_row(domain, q, recurrence, n))


def qbinomial(n, k, domain=None, q=None, recurrence=1):
    """
    The q-binomial [n over k] by one of the two q-Pascal recurrences
    (``recurrence`` 1 or 2); both give the same polynomial.
    """
    if recurrence not in (1, 2):
        raise ArgumentError(f'recurrence must be 1 or 2, got {recurrence}')
    if not 0 <= k <= n:
        raise IndexOutOfRange(f'q-binomial [{n} over {k}] needs 0 <= k <= n', n=n, k=k)
    domain, q = _default_q(domain, q)
    return _row(domain, q, recurrence, n)[k]


def qbinomial_or_zero(n, k, domain=None, q=None):
    """[n over k] with [n over 0] = 1 for every n, and 0 outside 0 <= k <= n"""
    domain = domain or Q_RING
    if k == 0:
        return domain.one
    if k < 0 or n < k:
        return domain.zero
    return qbinomial(n, k, domain, q)


def qpochhammer(a, n, domain=None, q=None):
    """(a; q)_n = (1 - a)(1 - a q)...(1 - a q^{n-1})"""
    domain, q = _default_q(domain, q)
    a = domain.convert(a)
    out = domain.one
    factor = a
    for _ in range(n):
        out *= domain.one - factor
        factor *= q
    return out


def qbinomial_by_ratio(n, k, domain=None, q=None):
    """(q;q)_n / ((q;q)_k (q;q)_{n-k}) by exact division"""
    domain, q = _default_q(domain, q)
    num = qpochhammer(q, n, domain, q)
    den = qpochhammer(q, k, domain, q) * qpochhammer(q, n - k, domain, q)
    return domain.exact_div(num, den)


def qbinomial_mismatches(n_max, domain=None, q=None):
    """(n, k) where the two recurrences or the ratio definition disagree"""
    bad = []
    for n in range(n_max + 1):
        for k in range(n + 1):
            first = qbinomial(n, k, domain, q, recurrence=1)
            second = qbinomial(n, k, domain, q, recurrence=2)
            if first != second or first != qbinomial_by_ratio(n, k, domain, q):
                bad.append((n, k))
    SysLogger.debug(f'q-binomial self-test through n = {n_max}: {len(bad)} mismatches')
    return bad


def _qpower(domain, q, e):
    return _power(domain, q, e) if e >= 0 else domain.exact_div(domain.one, _power(domain, q, -e))


def rr_coefficient(domain, q, k, n):
    """q^{n(n+k)} / (q;q)_n, coefficient n of R(q^{k+1} t, q)"""
    return domain.exact_div(_qpower(domain, q, n * (n + k)), qpochhammer(q, n, domain, q))


def rr_a_coefficient(domain, q, a, k, n, variant='symmetric'):
    """
    Coefficient n of g_k in the family with the extra parameter a:

        symmetric:   q^{n(n+k)} / ((q;q)_n (a q^{k+1}; q)_n)
        asymmetric:  q^{n(n+k)} / ((q;q)_n (a q^k; q)_n) for k >= 0, g_-1 as in symmetric
    """
    shift = k + 1 if variant == 'symmetric' or k < 0 else k
    c = a * _qpower(domain, q, shift)
    den = qpochhammer(q, n, domain, q) * qpochhammer(c, n, domain, q)
    return domain.exact_div(_qpower(domain, q, n * (n + k)), den)
