#!/usr/bin/env python
# -*- coding: utf-8 -*-

document = """
# defaults; a YAML file named by $CFRAC_CONFIG is merged over this document

debug : false
schema : cfrac/1

log_cfg :
    log_dir :
    standard_format : '[%(levelname)1.1s %(asctime)s %(name)s:%(lineno)d] %(message)s'
    logging :
        -
            name : cfrac.debug.log
            level : DEBUG
        -
            name : cfrac.info.log
            level : INFO
        -
            name : cfrac.warning.log
            level : WARNING
        -
            name : cfrac.error.log
            level : ERROR
        -
            name : cfrac.critical.log
            level : CRITICAL

# exhaustive oracles grow exponentially, these are hard caps
limits :
    enumeration : 14
    flajolet : 10
    dumont_kreweras : 8
    qbinomial_cache : 4096

expand :
    algorithm : refined

verify :
    order : 8
    levels : 6

bench :
    repeats : 3
    warmup : 1
"""
