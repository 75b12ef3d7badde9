#!/usr/bin/env python
# -*- coding: utf-8 -*-
import io
import json
import random
from math import factorial

import pytest

from cfrac.cli import main
from cfrac.coeffs import RATIONALS
from cfrac.series import TruncatedSeries


def make_series(values, domain=RATIONALS):
    return TruncatedSeries.from_values(domain, values)


def factorials(N, domain=RATIONALS):
    return make_series([factorial(n) for n in range(N + 1)], domain)


def random_series(rng, N, low=-5, high=5):
    """rational coefficients with a nonzero constant term"""
    values = []
    for n in range(N + 1):
        num = rng.randint(low, high)
        while n == 0 and num == 0:
            num = rng.randint(low, high)
        values.append(f'{num}/{rng.randint(1, 4)}')
    return make_series(values)


@pytest.fixture
def qq():
    return RATIONALS


@pytest.fixture
def rng():
    return random.Random(20240521)


class CliResult(object):

    def __init__(self, code, out, err):
        self.code = code
        self.out = out
        self.err = err

    @property
    def json(self):
        return json.loads(self.out)


@pytest.fixture
def cli():
    """run the command line in-process; returns a CliResult"""
    def run(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = main(list(argv), out=out, err=err)
        return CliResult(code, out.getvalue(), err.getvalue())
    return run
