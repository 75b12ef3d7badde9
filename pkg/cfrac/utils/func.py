#!/usr/bin/env python
# -*- coding: utf-8 -*-
import json
import hashlib


def md5(val):
    if type(val) != bytes:
        val = val.encode('utf-8')
    return hashlib.md5(val).hexdigest()


def digest(obj):
    """
    md5 of the canonical JSON text of ``obj`` (sorted keys, no spaces)
    """
    return md5(json.dumps(obj, sort_keys=True, separators=(',', ':')))
