#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Series families, closed-form g_k families and the combinatorial oracles
"""
from .combinat import binomial
from .combinat import dumont_kreweras_oracle
from .combinat import stirling2
from .families import SYMBOLIC
from .families import Family
from .families import Pattern
from .families import SeriesSpec
from .families import families
from .families import generate
from .families import get_family
from .families import parse_params
from .gk import GK_FAMILIES
from .gk import GkFamily
from .gk import gk_family
from .qseries import qbinomial
from .qseries import qbinomial_by_ratio
from .qseries import qbinomial_mismatches
from .qseries import qpochhammer
