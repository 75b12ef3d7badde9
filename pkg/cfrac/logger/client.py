# !/usr/bin/env python
# -*- coding: utf-8 -*-
import logging

from functools import partial


class _SysLogger(object):
    def __init__(self, prefix='cfrac'):
        self.prefix = prefix

    def _logger(self, level):
        return logging.getLogger(f'{self.prefix}.{level}.log')

    @property
    def debug(self):
        """
        logging debug message
        """
        return partial(self._logger('debug').debug)

    @property
    def info(self):
        """
        logging info message
        """
        return partial(self._logger('info').info)

    @property
    def warning(self):
        return partial(self._logger('warning').warning)

    @property
    def error(self):
        return partial(self._logger('error').error)

    @property
    def critical(self):
        return partial(self._logger('critical').critical)

SysLogger = syslogger = _SysLogger()
