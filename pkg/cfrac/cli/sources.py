#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Series and path weights from command-line flags
"""
from ..catalog import get_family
from ..catalog import parse_params
from ..exception import ArgumentError
from ..expand import ExpansionShape
from ..expand import as_jfraction
from ..expand import as_sfraction
from ..expand import expand
from ..paths import DYCK
from ..paths import MODES
from ..paths import MOTZKIN
from ..paths import PathWeights
from .codec import load_series
from .codec import parse_domain
from .codec import read_document
from .command import option
from .command import parse_list


SERIES_FLAGS = (
    ('input', dict(type=str, default=None, help='series document, - for standard input')),
    ('family', dict(type=str, default=None, help='catalog family name')),
    ('params', dict(type=str, default='', help='family parameters, e.g. a=sym,b=1/2')),
    ('order', dict(type=int, default=None, help='truncation order N')),
)

WEIGHT_FLAGS = (
    ('alphas', dict(type=str, multiple=True, help='Dyck fall weights alpha_1,alpha_2,... (.. repeats)')),
    ('betas', dict(type=str, multiple=True, help='Motzkin fall weights beta_1,beta_2,...')),
    ('gammas', dict(type=str, multiple=True, help='Motzkin level weights gamma_0,gamma_1,...')),
    ('rises', dict(type=str, multiple=True, help='rise weights a_0,a_1,... (default 1)')),
    ('domain', dict(type=str, default='QQ', help='weight domain: QQ, QQ[x,...] or QQ(q)')),
    ('mode', dict(type=str, default=None, help='motzkin or dyck, for symbolic or derived weights')),
    ('symbolic', dict(type=bool, default=False, help='fresh indeterminate weights')),
)


def _flags(specs):
    def wrapper(func):
        for name, kwargs in reversed(specs):
            func = option(name, **kwargs)(func)
        return func
    return wrapper


series_flags = _flags(SERIES_FLAGS)
weight_flags = _flags(WEIGHT_FLAGS)


def series_from_options(opts, order=None):
    """(series, canonical input document) from --input or --family/--params"""
    path = getattr(opts, 'input', None)
    name = getattr(opts, 'family', None)
    if path and name:
        raise ArgumentError('give either --input or --family, not both')
    if path:
        return load_series(read_document(path), order)
    if name:
        doc = {'family': name, 'params': parse_params(getattr(opts, 'params', ''))}
        return load_series(doc, 0 if order is None else order)
    raise ArgumentError('a series is needed: --input <file|-> or --family <name>')


def weight_values(domain, values, first, pad=None):
    """
    A list flag as a function of the index. Past the listed values the last
    one repeats when the list ends in .., otherwise ``pad`` (zero by default)
    takes over, so a finite list ends the fraction.
    """
    items, repeat = parse_list(values)
    converted = [domain.convert(v) for v in items]
    last = len(converted) - 1
    if repeat:
        return lambda i: converted[min(i - first, last)]
    pad = domain.zero if pad is None else pad
    return lambda i: converted[i - first] if i - first <= last else pad


def _mode(opts, default=None):
    mode = (opts.mode or default or '').lower()
    if mode not in MODES:
        raise ArgumentError(f'--mode must be one of {", ".join(MODES)}')
    return mode


def family_weights(name, params, interleave=False):
    """path weights of a family's known fraction, or None when it has none"""
    pattern = get_family(name).pattern(params)
    domain = get_family(name).resolve(params)[0]
    if interleave or pattern.shape == 'j':
        if pattern.beta is None:
            return None
        return PathWeights.motzkin(domain, pattern.beta, pattern.gamma)
    if pattern.alpha is not None:
        return PathWeights.dyck(domain, pattern.alpha)
    return None


def expansion_weights(f, mode):
    """weights read off the series' own S- or J-fraction"""
    if mode == MOTZKIN:
        gammas, betas = as_jfraction(expand(f, ExpansionShape.jfraction()))
        return PathWeights.motzkin(f.domain, betas, gammas)
    return PathWeights.dyck(f.domain, as_sfraction(expand(f, ExpansionShape.sfraction())))


def weights_from_options(opts, size, interleave=False):
    """
    Path weights from explicit lists, a family's pattern or fresh
    indeterminates, in that order of preference
    """
    domain = parse_domain(opts.domain)
    rises = weight_values(domain, opts.rises, 0, pad=domain.one) if opts.rises else None
    if opts.alphas:
        if opts.betas or opts.gammas:
            raise ArgumentError('--alphas cannot be combined with --betas/--gammas')
        return PathWeights.dyck(domain, weight_values(domain, opts.alphas, 1), rises)
    if opts.betas or opts.gammas:
        if not (opts.betas and opts.gammas):
            raise ArgumentError('Motzkin weights need both --betas and --gammas')
        return PathWeights.motzkin(domain, weight_values(domain, opts.betas, 1),
                                   weight_values(domain, opts.gammas, 0), rises)
    if opts.symbolic:
        mode = _mode(opts)
        return PathWeights.symbolic(mode, 2 * size + 1 if mode == DYCK else size + 1,
                                    rises=rises is not None)
    if opts.family:
        w = family_weights(opts.family, parse_params(opts.params), interleave)
        if w is not None:
            return w
    raise ArgumentError('weights are needed: --alphas, --betas/--gammas, --symbolic --mode '
                        'or a --family with a known fraction')
