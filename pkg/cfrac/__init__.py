#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
cfrac: continued-fraction expansions of truncated power series in exact arithmetic.

>>> from cfrac import coeffs, series, expand
>>> f = series.TruncatedSeries.from_values(coeffs.RATIONALS, [1, 1, 2, 6, 24])
>>> cf, table = expand.expand_refined(f, expand.ExpansionShape.sfraction())
"""

__version__ = '1.0.0'
