#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Command registration and option parsing

A command is a function ``func(opts, args, out)`` returning the exit code,
registered with ``command``; its flags are declared with ``option`` and
parsed by a tornado ``OptionParser`` of its own.
"""
import os
import inspect
import logging

from tornado.log import LogFormatter
from tornado.log import define_logging_options
from tornado.options import OptionParser

from ..config import settings
from ..exception import ArgumentError
from ..logger import enable_pretty_logging


def command(name, help=''):
    """
    register the decorated function as the command ``name``

        @command('expand', help='...')
        @option('order', type=int)
        def cmd_expand(opts, args, out):
            ...
    """
    def wrapper(func):
        func._command = name
        func._help = help
        func.__dict__.setdefault('_options', [])
        return func
    return wrapper


def option(name, **kwargs):
    """declare one flag; the arguments are those of ``OptionParser.define``"""
    def wrapper(func):
        # decorators apply bottom-up, inserting at the front keeps source order
        func.__dict__.setdefault('_options', []).insert(0, dict(name=name, **kwargs))
        return func
    return wrapper


def get_commands(*modules):
    """every registered command in ``modules``, by name"""
    found = {}
    for module in modules:
        members = inspect.getmembers(module, lambda f: callable(f) and hasattr(f, '_command'))
        for _, func in members:
            if func._command in found:
                raise Exception(f'command repeated {func._command}')
            found[func._command] = func
    return found


def _flag_name(name):
    return name.replace('_', '-')


def build_parser(func):
    parser = OptionParser()
    define_logging_options(parser)
    # None: no --logging flag given, see configure_logging
    parser.logging = None
    for spec in func._options:
        parser.define(**spec)
    return parser


def bool_flags(func):
    flags = {'help', 'log-to-stderr'}
    flags.update(_flag_name(spec['name']) for spec in func._options if spec.get('type') is bool)
    return flags


def normalize_argv(args, flags):
    """
    Rewrite ``--name value`` as ``--name=value`` (unless ``name`` is a boolean
    flag) and move positional words behind the options, which is the form
    ``OptionParser.parse_command_line`` reads.
    """
    opts, positional = [], []
    i = 0
    while i < len(args):
        arg = args[i]
        if arg == '--':
            positional.extend(args[i + 1:])
            break
        if arg.startswith('--') and '=' not in arg:
            name = _flag_name(arg[2:])
            if name not in flags and i + 1 < len(args) and not args[i + 1].startswith('--'):
                opts.append(f'{arg}={args[i + 1]}')
                i += 2
                continue
            opts.append(arg)
        elif arg.startswith('-'):
            opts.append(arg)
        else:
            positional.append(arg)
        i += 1
    return opts, positional


def parse_args(func, args, prog='cfrac'):
    """(options, positional words) of one command invocation"""
    parser = build_parser(func)
    opts, positional = normalize_argv(list(args), bool_flags(func))
    # final=False: logging is set up by configure_logging, not tornado's root callback
    try:
        parser.parse_command_line([prog] + opts, final=False)
    except ValueError as e:
        # int('x') and friends from the option types
        raise ArgumentError(f'bad flag value: {e}')
    return parser, positional


def parse_list(values):
    """
    (items, repeat) of a list flag; a trailing ``..`` on the last item (or
    as an item of its own) means the last value repeats forever
    """
    if isinstance(values, str):
        values = values.split(',')
    items = [str(v).strip() for v in values or () if str(v).strip()]
    repeat = False
    if items and items[-1].endswith('..'):
        repeat = True
        last = items.pop()[:-2].strip()
        if last:
            items.append(last)
    if repeat and not items:
        raise ArgumentError('a repeated list needs at least one value before ..')
    for item in items:
        if '..' in item:
            raise ArgumentError(f'.. may only end a list, found {item!r}')
    return items, repeat


def _level(name):
    return getattr(logging, str(name).upper())


def configure_logging(opts):
    """
    Set up every logger of ``settings.log_cfg.logging`` with a parser of its
    own. An explicit ``--logging`` sets every level; without it the configured
    levels apply with a floor of WARNING
    """
    if opts.logging is not None and opts.logging.lower() == 'none':
        return
    requested = None if opts.logging is None else _level(opts.logging)
    logdir = settings.LOGGING_DIR
    fmt = settings.log_cfg.standard_format
    for log in settings.log_cfg.logging:
        opt = OptionParser()
        define_logging_options(opt)
        if requested is None:
            level = max(_level(log.get('level', 'INFO')), logging.WARNING)
        else:
            level = requested
        opt.logging = logging.getLevelName(level)
        opt.log_to_stderr = log.get('log_to_stderr', True) if opts.log_to_stderr is None else opts.log_to_stderr
        if log.get('filename'):
            opt.log_file_prefix = os.path.join(logdir, log['filename'])
            opt.log_rotate_mode = 'time'
            opt.log_rotate_when = log.get('when', 'midnight')
            opt.log_rotate_interval = log.get('interval', 1)
            if log.get('backups'):
                opt.log_file_num_backups = log.get('backups')
        logger = logging.getLogger(log['name'])
        logger.propagate = 0
        enable_pretty_logging(options=opt, logger=logger, fmt=fmt)
        for handler in logger.handlers:
            handler.setFormatter(LogFormatter(fmt=fmt, color=settings.debug))
