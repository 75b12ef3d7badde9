#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
J-fraction coefficients from the Hankel matrix of the moments

The symmetric elimination H = L D L^T of H_ij = a_{i+j} has the Jacobi-Rogers
table as L and d_k = a_0 beta_1 ... beta_k on the diagonal.
"""
from ..coeffs import RATIONALS
from ..exception import ArgumentError
from ..exception import SingularPivot
from ..logger import SysLogger
from ..series import TruncatedSeries


def hankel_ldl(a, domain, rows, cols):
    """
    Eliminate the (rows+1) x (cols+1) block of H. Returns (L, d) with L[i][k]
    for k <= min(i, cols) and the pivots d_0..d_cols.
    """
    U = [[a[i + j] for j in range(cols + 1)] for i in range(rows + 1)]
    L = [[domain.zero] * (cols + 1) for _ in range(rows + 1)]
    d = []
    for k in range(cols + 1):
        pivot = U[k][k]
        if not pivot:
            raise SingularPivot(f'pivot {k} of the Hankel matrix vanishes', index=k,
                                pivots=[domain.encode(x) for x in d])
        d.append(pivot)
        L[k][k] = domain.one
        div = domain.divider(pivot)
        for i in range(k + 1, rows + 1):
            l_ik = div(U[i][k])
            L[i][k] = l_ik
            if not l_ik:
                continue
            for j in range(k + 1, cols + 1):
                U[i][j] -= l_ik * U[k][j]
    return L, d


def jfraction_from_hankel(a, domain=None):
    """
    (gammas, betas, d0) of the J-fraction whose moments are a_0..a_n.

    For n = 2m this gives gamma_0..gamma_{m-1} and beta_1..beta_m; an odd n = 2m+1
    fixes gamma_m as well.
    """
    if isinstance(a, TruncatedSeries):
        domain = a.domain
        a = a.coeffs
    else:
        domain = domain or RATIONALS
        a = [domain.convert(x) for x in a]
    n = len(a) - 1
    if n < 0:
        raise ArgumentError('no moments given')
    if not domain.is_unit(a[0]):
        raise SingularPivot(f'a_0 = {domain.encode(a[0])} is not invertible', index=0)
    m = n // 2
    rows = n - m
    L, d = hankel_ldl(a, domain, rows, m)
    betas = [domain.exact_div(d[k], d[k - 1]) for k in range(1, m + 1)]
    gammas = []
    for k in range(rows):
        below = L[k][k - 1] if k >= 1 else domain.zero
        gammas.append(L[k + 1][k] - below)
    SysLogger.debug(f'hankel elimination of order {n}: {len(gammas)} gammas, {len(betas)} betas')
    return gammas, betas, d[0]
