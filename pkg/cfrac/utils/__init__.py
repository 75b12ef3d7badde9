#!/usr/bin/env python
# -*- coding: utf-8 -*-
from .object import RWLock
from .object import LockedMemo
