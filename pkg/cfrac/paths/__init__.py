#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Weighted Motzkin and Dyck paths and the triangles that count them
"""
from .checks import CorrespondenceReport
from .checks import FlajoletReport
from .checks import HankelReport
from .checks import flajolet_check
from .checks import g_table_correspondence_check
from .checks import hankel_factorization_check
from .enumerate import enumerate_weighted_paths
from .enumerate import path_weight
from .tables import TriangularTable
from .tables import jacobi_rogers_table
from .tables import stieltjes_tables
from .weights import DYCK
from .weights import MODES
from .weights import MOTZKIN
from .weights import PathWeights
