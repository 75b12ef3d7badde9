# !/usr/bin/env python
# -*- coding: utf-8 -*-
import os
import logging
import logging.handlers
from tornado.log import LogFormatter
from .client import syslogger
from .client import SysLogger


def _has_handler(logger, kind):
    return any(type(h) is kind for h in logger.handlers)


def enable_pretty_logging(options=None, logger=None, fmt=None):
    if options is None:
        from tornado.options import options
    if options.logging is None or options.logging.lower() == 'none':
        return
    if logger is None:
        logger = logging.getLogger()
    logger.setLevel(getattr(logging, options.logging.upper()))
    formatter = dict(fmt=fmt) if fmt else {}
    if options.log_file_prefix:
        rotate_mode = options.log_rotate_mode
        if rotate_mode == 'size':
            kind = logging.handlers.RotatingFileHandler
            kwargs = dict(maxBytes=options.log_file_max_size)
        elif rotate_mode == 'time':
            kind = logging.handlers.TimedRotatingFileHandler
            kwargs = dict(when=options.log_rotate_when,
                          interval=options.log_rotate_interval)
        else:
            error_message = 'The value of log_rotate_mode option should be ' + \
                            '"size" or "time", not "%s".' % rotate_mode
            raise ValueError(error_message)
        if not _has_handler(logger, kind):
            os.makedirs(os.path.dirname(options.log_file_prefix) or '.', exist_ok=True)
            channel = kind(filename=options.log_file_prefix,
                           backupCount=options.log_file_num_backups, **kwargs)
            channel.setFormatter(LogFormatter(color=False, **formatter))
            logger.addHandler(channel)

    if (options.log_to_stderr or
            (options.log_to_stderr is None and not logger.handlers)):
        if not _has_handler(logger, logging.StreamHandler):
            channel = logging.StreamHandler()
            channel.setFormatter(LogFormatter(**formatter))
            logger.addHandler(channel)
