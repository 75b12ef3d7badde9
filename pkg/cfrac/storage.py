#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Attribute-access dictionaries for configuration documents
"""
import copy


class Storage(dict):
    """
    dict with attribute access, ``settings.limits.enumeration`` instead of
    ``settings['limits']['enumeration']``
    """

    def __getattr__(self, key):
        try:
            return self[key]
        except KeyError as k:
            raise AttributeError(k)

    def __setattr__(self, key, value):
        self[key] = value

    def __delattr__(self, key):
        try:
            del self[key]
        except KeyError as k:
            raise AttributeError(k)

    def __repr__(self):
        return '<Storage ' + dict.__repr__(self) + '>'


def _convert(value):
    if isinstance(value, dict):
        return dict_to_storage(value)
    if isinstance(value, list):
        return [_convert(item) for item in value]
    return value


def dict_to_storage(from_dict):
    """
        >>> s = dict_to_storage({'a': [{'b': {'c': 3}}]})
        >>> s.a[0].b.c
        3
    """
    return Storage((k, _convert(v)) for k, v in from_dict.items())


def deep_merge(base, override):
    """
    Merge ``override`` into a copy of ``base``; nested mappings merge key by key,
    everything else (lists included) is replaced.
    """
    merged = copy.deepcopy(dict(base))
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged
