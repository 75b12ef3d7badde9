#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
cfrac command line

    cfrac expand --family factorial --order 8 --shape s
    cfrac verify --check hankel --family factorial --size 6
    cfrac table --kind S --alphas 1,1,2,2,3,3,4,4,5,5,6,6 --size 6
    cfrac moments --params eps=1/2 --budget 30
    cfrac bench --family factorial --Ns 100,200,500
    cfrac catalog list

Exit codes: 0 success, 1 malformed input, 2 expansion error (error object
on standard output), 3 a verify check failed.
"""
import sys

from tornado.options import Error as OptionError

from ..exception import ArgumentError
from ..exception import BadParams
from ..exception import CFracError
from ..exception import ConfigError
from ..exception import UnknownFamily
from ..logger import SysLogger
from . import bench
from . import handlers
from .codec import encode_error
from .codec import write
from .command import configure_logging
from .command import get_commands
from .command import parse_args
from .handlers import EXIT_EXPANSION
from .handlers import EXIT_MALFORMED

COMMANDS = get_commands(handlers, bench)

# errors that mean the input itself was wrong, not the mathematics
MALFORMED = (ArgumentError, ConfigError, UnknownFamily, BadParams)


def usage():
    lines = ['usage: cfrac <command> [--flag value ...]', '', 'commands:']
    for name, func in sorted(COMMANDS.items()):
        lines.append(f'  {name:<10}{func._help}')
    lines.append('')
    lines.append('cfrac <command> --help lists the flags of a command')
    return '\n'.join(lines)


def main(argv=None, out=None, err=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    out = out or sys.stdout
    err = err or sys.stderr
    if not argv or argv[0] in ('-h', '--help', 'help'):
        err.write(usage() + '\n')
        return 0 if argv else EXIT_MALFORMED
    name, rest = argv[0], argv[1:]
    func = COMMANDS.get(name)
    if func is None:
        err.write(f'cfrac: unknown command {name!r}\n\n{usage()}\n')
        return EXIT_MALFORMED
    try:
        opts, positional = parse_args(func, rest, prog=f'cfrac {name}')
        configure_logging(opts)
        return func(opts, positional, out)
    except OptionError as e:
        err.write(f'cfrac {name}: {e}\n')
        return EXIT_MALFORMED
    except MALFORMED as e:
        err.write(f'cfrac {name}: {e.msg}\n')
        return EXIT_MALFORMED
    except CFracError as e:
        SysLogger.debug(f'{name} failed: {e.code}')
        write(out, encode_error(e))
        return EXIT_EXPANSION
