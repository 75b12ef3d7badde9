#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
utime, named apart from the standard time module
"""
import time


def perf_ms():
    """monotonic clock in milliseconds, for measuring elapsed time only"""
    return time.perf_counter() * 1000


def elapsed_ms(start):
    return perf_ms() - start
