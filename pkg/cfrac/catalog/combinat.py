#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Integer combinatorics used by the series families
"""
import itertools
from math import comb
from math import factorial

from ..coeffs import PolynomialRing
from ..config import settings
from ..exception import SizeLimit
from ..utils import LockedMemo

DK_RING = PolynomialRing('a', 'b')

_stirling = LockedMemo('stirling2', settings.limits.qbinomial_cache)


def binomial(n, k):
    """C(n, k) with C(n, 0) = 1 for every n and 0 outside 0 <= k <= n"""
    if k == 0:
        return 1
    if k < 0 or n < k:
        return 0
    return comb(n, k)


def rising(domain, x, n):
    """x (x + 1) ... (x + n - 1) for a domain element x"""
    out = domain.one
    for i in range(n):
        out *= x + i
    return out


def stirling2_row(n):
    """S(n, 0..n) by S(n, k) = k S(n-1, k) + S(n-1, k-1)"""
    if n == 0:
        return (1,)

    def compute():
        prev = stirling2_row(n - 1) + (0,)
        return tuple([0] + [k * prev[k] + prev[k - 1] for k in range(1, n + 1)])

    return _stirling.get_or_compute(n, compute)


def stirling2(n, k):
    if k < 0 or k > n:
        return 0
    # fill the memo upward first
    for m in range(n):
        stirling2_row(m)
    return stirling2_row(n)[k]


def records(perm):
    """strict left-to-right maxima"""
    out, best = set(), -1
    for i, v in enumerate(perm):
        if v > best:
            out.add(i)
            best = v
    return out


def antirecords(perm):
    """strict right-to-left minima"""
    out, best = set(), len(perm) + 1
    for i in range(len(perm) - 1, -1, -1):
        if perm[i] < best:
            out.add(i)
            best = perm[i]
    return out


def dumont_kreweras_oracle(n):
    """
    P_n(a, b): the sum over permutations of n of a^(records) b^(antirecords that
    are not records), by walking all n! permutations
    """
    limit = settings.limits.dumont_kreweras
    if n > limit:
        raise SizeLimit(f'permutation enumeration is capped at n = {limit}, got {n}', limit=limit, n=n)
    a, b = DK_RING.gen('a'), DK_RING.gen('b')
    counts = {}
    for perm in itertools.permutations(range(n)):
        rec = records(perm)
        exclusive = antirecords(perm) - rec
        key = (len(rec), len(exclusive))
        counts[key] = counts.get(key, 0) + 1
    total = DK_RING.zero
    for (r, e), c in counts.items():
        total += c * a ** r * b ** e
    return total


__all__ = ['binomial', 'factorial', 'rising', 'stirling2', 'stirling2_row',
           'dumont_kreweras_oracle', 'records', 'antirecords', 'DK_RING']
