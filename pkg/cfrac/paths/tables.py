#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Jacobi-Rogers and Stieltjes-Rogers triangles

T_{n,k} is the weight of all paths of length n from height 0 to height k
(Dyck: 2n steps ending at height 2k, or 2n+1 steps ending at height 2k+1 for the
primed table). Rise weights are folded into the fall weights, so T_{n,n} = 1.
"""
from ..exception import IndexOutOfRange
from ..exception import TableSelfTestFailed
from ..logger import SysLogger

J, S, SPRIME = 'J', 'S', 'Sprime'


class TriangularTable(object):
    __slots__ = ('kind', 'domain', 'rows')

    def __init__(self, kind, domain, rows):
        self.kind = kind
        self.domain = domain
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def size(self):
        """N, the last row index"""
        return len(self.rows) - 1

    def entry(self, n, k):
        if 0 <= k <= n <= self.size:
            return self.rows[n][k]
        if 0 <= n <= self.size and k > n:
            return self.domain.zero
        raise IndexError(f'{self.kind}_{n},{k} is outside the table of size {self.size}')

    def column(self, k):
        return [self.rows[n][k] for n in range(k, len(self.rows))]

    def square(self, size=None):
        """rows 0..size as a lower-triangular square block"""
        size = self.size if size is None else size
        zero = self.domain.zero
        return [list(self.rows[n]) + [zero] * (size - n) for n in range(size + 1)]

    def replace(self, n, k, value):
        rows = [list(r) for r in self.rows]
        rows[n][k] = value
        return TriangularTable(self.kind, self.domain, rows)

    def encode(self):
        enc = self.domain.encode
        return [[enc(x) for x in row] for row in self.rows]

    def __eq__(self, other):
        return (isinstance(other, TriangularTable) and self.kind == other.kind
                and self.rows == other.rows)

    def __repr__(self):
        return f'<TriangularTable {self.kind} size {self.size} over {self.domain}>'


def jacobi_rogers_table(w, N):
    """J_{n+1,k} = J_{n,k-1} + gamma_k J_{n,k} + beta_{k+1} J_{n,k+1}"""
    domain = w.domain
    gamma, beta = w.jfraction_weights()
    rows = [[domain.one]]
    for n in range(N):
        prev = rows[-1]
        row = []
        for k in range(n + 2):
            v = prev[k - 1] if k >= 1 else domain.zero
            if k <= n and prev[k]:
                g = gamma(k)
                if g:
                    v += g * prev[k]
            if k + 1 <= n and prev[k + 1]:
                v += beta(k + 1) * prev[k + 1]
            row.append(v)
        rows.append(row)
    return TriangularTable(J, domain, rows)


def _alpha_function(alphas, domain):
    """alpha_i as a function, from PathWeights (Dyck) or a sequence alpha_1, alpha_2, ..."""
    if hasattr(alphas, 'effective_fall'):
        return alphas.effective_fall, alphas.domain
    values = [domain.convert(a) for a in alphas]

    def alpha(i):
        if not 1 <= i <= len(values):
            raise IndexOutOfRange(f'alpha_{i} is not given; only alpha_1..alpha_{len(values)}',
                                  index=i)
        return values[i - 1]

    return alpha, domain


def stieltjes_tables(alphas, N, domain=None, self_test=True):
    """
    (S, S') by the joint recurrence

        S'_{n,k}  = S_{n,k} + alpha_{2k+2} S_{n,k+1}
        S_{n+1,k} = S'_{n,k-1} + alpha_{2k+1} S'_{n,k}

    needing alpha_1..alpha_{2N}. With ``self_test`` both tables are rechecked
    against their own three-term recurrences.
    """
    alpha, domain = _alpha_function(alphas, domain)
    zero = domain.zero
    srows = [[domain.one]]
    prows = []
    for n in range(N + 1):
        s = srows[n]
        prime = []
        for k in range(n + 1):
            v = s[k]
            if k + 1 <= n and s[k + 1]:
                v += alpha(2 * k + 2) * s[k + 1]
            prime.append(v)
        prows.append(prime)
        if n == N:
            break
        nxt = []
        for k in range(n + 2):
            v = prime[k - 1] if k >= 1 else zero
            if k <= n and prime[k]:
                v += alpha(2 * k + 1) * prime[k]
            nxt.append(v)
        srows.append(nxt)
    stable = TriangularTable(S, domain, srows)
    ptable = TriangularTable(SPRIME, domain, prows)
    if self_test:
        _self_test(stable, ptable, alpha, N)
    return stable, ptable


def _self_test(stable, ptable, alpha, N):
    zero = stable.domain.zero

    def a(i):
        return alpha(i) if i >= 1 else zero

    def check(table, n, k, expected):
        if table.entry(n + 1, k) != expected:
            raise TableSelfTestFailed(f'{table.kind}_{n + 1},{k} breaks its three-term recurrence',
                                      kind=table.kind, n=n + 1, k=k)

    for n in range(N):
        s = stable
        for k in range(n + 2):
            v = s.entry(n, k - 1) if k >= 1 else zero
            if k <= n:
                v += (a(2 * k) + a(2 * k + 1)) * s.entry(n, k)
            if k + 1 <= n:
                v += a(2 * k + 1) * a(2 * k + 2) * s.entry(n, k + 1)
            check(s, n, k, v)
        p = ptable
        for k in range(n + 2):
            v = p.entry(n, k - 1) if k >= 1 else zero
            if k <= n:
                v += (a(2 * k + 1) + a(2 * k + 2)) * p.entry(n, k)
            if k + 1 <= n:
                v += a(2 * k + 2) * a(2 * k + 3) * p.entry(n, k + 1)
            check(p, n, k, v)
    SysLogger.debug(f'stieltjes tables of size {N} passed the three-term self-test')
