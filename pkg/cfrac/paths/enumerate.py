#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Brute-force path sums, used as an oracle for the recurrences
"""
from ..config import settings
from ..exception import ArgumentError
from ..exception import SizeLimit
from .weights import DYCK
from .weights import MOTZKIN

RISE, LEVEL, FALL = 'U', 'L', 'D'


def _steps(mode):
    return (RISE, LEVEL, FALL) if mode == MOTZKIN else (RISE, FALL)


def _step_weight(w, step, height):
    if step == RISE:
        return w.rise(height), height + 1
    if step == LEVEL:
        return w.level(height), height
    return w.fall(height), height - 1


def enumerate_weighted_paths(w, n, start=0, end=0, mode=None):
    """
    Sum of the weights of all paths of length ``n`` from height ``start`` to
    ``end`` that never go below min(start, end). Every step sequence is walked
    explicitly; only sequences that can no longer reach ``end`` are cut off.
    """
    mode = mode or w.mode
    if mode == MOTZKIN and w.mode == DYCK:
        raise ArgumentError('Dyck weights have no level steps')
    limit = settings.limits.enumeration
    if n > limit:
        raise SizeLimit(f'path enumeration is capped at length {limit}, got {n}', limit=limit, length=n)
    if n < 0 or start < 0 or end < 0:
        raise ArgumentError('length and heights must be nonnegative')
    floor = min(start, end)
    steps = _steps(mode)
    domain = w.domain

    def walk(height, left, weight):
        if abs(height - end) > left:
            return domain.zero
        if not left:
            return weight
        total = domain.zero
        for step in steps:
            if step == FALL and height == floor:
                continue
            sw, nxt = _step_weight(w, step, height)
            if sw:
                total += walk(nxt, left - 1, weight * sw)
        return total

    return walk(start, n, domain.one)


def path_weight(steps, w, start=0):
    """weight of one explicit path word over U, L and D, e.g. 'ULULDDLUD'"""
    domain = w.domain
    weight = domain.one
    height = start
    for i, step in enumerate(steps.upper()):
        if step not in (RISE, LEVEL, FALL):
            raise ArgumentError(f'bad step {step!r} at position {i}; use U, L or D')
        if step == FALL and height == 0:
            raise ArgumentError(f'step {i} falls below height 0')
        if step == LEVEL and w.mode == DYCK:
            raise ArgumentError('Dyck paths have no level steps')
        sw, height = _step_weight(w, step, height)
        weight *= sw
    return weight
