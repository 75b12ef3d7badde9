#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Continued-fraction expansion of truncated power series
"""
from ..exception import ArgumentError
from .evaluate import as_jfraction
from .evaluate import as_sfraction
from .evaluate import cf_to_series
from .evaluate import contract_s_to_j
from .evaluate import jfraction
from .evaluate import sfraction
from .hankel import jfraction_from_hankel
from .primitive import expand_primitive
from .refined import RefinedExpander
from .refined import expand_refined
from .refined import extend
from .scan import NegativeAlpha
from .scan import NoneFound
from .scan import stieltjes_positivity_scan
from .types import CFraction
from .types import CFTerm
from .types import ExpansionShape
from .types import GTable
from .types import Inconclusive
from .types import Terminated
from .verify import EulerGaussReport
from .verify import cf_coefficient_series
from .verify import euler_gauss_verify
from .verify import verify_table

ALGORITHMS = ('refined', 'primitive')


def expand(f, shape=None, algorithm='refined', g_minus1=None):
    """CFraction of ``f`` with either algorithm (the g-table is dropped)"""
    if algorithm == 'refined':
        return expand_refined(f, shape, g_minus1)[0]
    if algorithm == 'primitive':
        if g_minus1 is not None:
            raise ArgumentError('the primitive algorithm has no g_-1')
        return expand_primitive(f, shape)
    raise ArgumentError(f'unknown algorithm {algorithm!r}, expected one of {ALGORITHMS}')
