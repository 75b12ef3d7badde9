#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
The expand, verify, table, moments and catalog commands
"""
from ..catalog import GK_FAMILIES
from ..catalog import families
from ..catalog import get_family
from ..catalog import gk_family
from ..catalog import parse_params
from ..config import settings
from ..exception import ArgumentError
from ..expand import ALGORITHMS
from ..expand import ExpansionShape
from ..expand import cf_to_series
from ..expand import expand
from ..expand import expand_refined
from ..expand import stieltjes_positivity_scan
from ..expand import verify_table
from ..logger import SysLogger
from ..paths import DYCK
from ..paths import MOTZKIN
from ..paths import flajolet_check
from ..paths import g_table_correspondence_check
from ..paths import hankel_factorization_check
from ..paths import jacobi_rogers_table
from ..paths import stieltjes_tables
from ..series import compose_even
from ..utils import utime
from .codec import SCHEMA
from .codec import ExpansionReport
from .codec import decode_cfraction
from .codec import encode_cfraction
from .codec import input_digest
from .codec import load_g_minus1
from .codec import series_document
from .codec import write
from .command import command
from .command import option
from .sources import expansion_weights
from .sources import family_weights
from .sources import series_flags
from .sources import series_from_options
from .sources import weight_flags
from .sources import weights_from_options

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_EXPANSION = 2
EXIT_FAILED = 3

CHECKS = ('euler-gauss', 'flajolet', 'hankel', 'gtable', 'roundtrip')


def _order(opts, default):
    order = opts.order if opts.order is not None else default
    if order < 0:
        raise ArgumentError(f'--order must be >= 0, got {order}')
    return order


@command('expand', help='continued-fraction expansion of a series')
@series_flags
@option('shape', type=str, default='c', help='c, s, j or custom:<M list>')
@option('algorithm', type=str, default=settings.expand.algorithm, help='refined or primitive')
@option('g_minus_one', type=str, default=None, help='coefficient document of g_-1 (refined only)')
@option('output', type=str, default='json', help='json or text')
def cmd_expand(opts, args, out):
    if opts.output not in ('json', 'text'):
        raise ArgumentError(f'--output must be json or text, got {opts.output!r}')
    if opts.algorithm not in ALGORITHMS:
        raise ArgumentError(f'--algorithm must be one of {", ".join(ALGORITHMS)}')
    shape = ExpansionShape.parse(opts.shape)
    f, doc = series_from_options(opts, opts.order)
    g = load_g_minus1(opts.g_minus_one, f.domain, f.order) if opts.g_minus_one else None
    start = utime.perf_ms()
    cf = expand(f, shape, opts.algorithm, g)
    ms = utime.elapsed_ms(start)
    SysLogger.info(f'expanded {doc.get("family", "input")} through t^{f.order} in {ms:.1f} ms')
    report = ExpansionReport(cf, input_digest(doc), ms, opts.algorithm, shape, f.order)
    if opts.output == 'text':
        out.write(report.as_text() + '\n')
    else:
        write(out, report.as_dict())
    return EXIT_OK


# verify

def _first(report):
    mismatches = report.get('mismatches')
    if mismatches:
        report['counterexample'] = mismatches[0]
    return report


def _series(opts, order):
    """a family through the check order; an input document through --order, or all of it"""
    return series_from_options(opts, order if opts.family else opts.order)


def _check_euler_gauss(opts, order):
    if opts.family and not opts.input and get_family(opts.family).name in GK_FAMILIES:
        fam = gk_family(opts.family, parse_params(opts.params))
        report = fam.verify(order, opts.levels)
        return dict(report.as_dict(fam.domain), source='closed form', family=fam.name)
    f, _ = _series(opts, order)
    _, table = expand_refined(f, ExpansionShape.parse(opts.shape))
    return dict(verify_table(table).as_dict(f.domain), source='g-table')


def _check_flajolet(opts, order):
    w = weights_from_options(opts, order)
    return _first(flajolet_check(w, order).as_dict(w.domain))


def _hankel_weights(opts, a, size):
    if opts.alphas or opts.betas or opts.gammas or opts.symbolic or not (opts.family or opts.input):
        return weights_from_options(opts, size, opts.interleave)
    if opts.family:
        w = family_weights(opts.family, parse_params(opts.params), opts.interleave)
        if w is not None:
            return w
    mode = (opts.mode or (MOTZKIN if opts.interleave else DYCK)).lower()
    return expansion_weights(a, mode)


def _check_hankel(opts, order):
    size = opts.size if opts.size is not None else order
    need = 2 * size + 1
    if opts.interleave:
        f, _ = series_from_options(opts, size if opts.family else None)
        a = compose_even(f, min(need, 2 * f.order + 1))
    else:
        a, _ = series_from_options(opts, need if opts.family else None)
    w = _hankel_weights(opts, a, size)
    report = hankel_factorization_check(a, w, size)
    return _first(report.as_dict(w.domain))


def _check_gtable(opts, order):
    w = weights_from_options(opts, order)
    return _first(g_table_correspondence_check(w, order).as_dict(w.domain))


def _check_roundtrip(opts, order):
    f, _ = _series(opts, order)
    shape = ExpansionShape.parse(opts.shape)
    results = {algorithm: expand(f, shape, algorithm) for algorithm in ALGORITHMS}
    cf = results['refined']
    depth = cf.determined_order()
    depth = f.order if depth is None else min(depth, f.order)
    back = cf_to_series(cf, depth)
    report = {
        'ok': True,
        'order': depth,
        'algorithms_agree': all(r == cf for r in results.values()),
        'series': back == f.truncate(depth),
        'json': decode_cfraction(encode_cfraction(cf)) == cf,
    }
    report['ok'] = report['algorithms_agree'] and report['series'] and report['json']
    if not report['algorithms_agree']:
        report['counterexample'] = {name: encode_cfraction(r) for name, r in results.items()}
    elif not report['series']:
        for n, (x, y) in enumerate(zip(f.coeffs, back.coeffs)):
            if x != y:
                report['counterexample'] = {'n': n, 'expected': f.domain.encode(x),
                                            'got': f.domain.encode(y)}
                break
    return report


_CHECKERS = {
    'euler-gauss': _check_euler_gauss,
    'flajolet': _check_flajolet,
    'hankel': _check_hankel,
    'gtable': _check_gtable,
    'roundtrip': _check_roundtrip,
}


@command('verify', help='run identity checks, exit 0 iff all pass')
@option('check', type=str, multiple=True, help=f'any of {", ".join(CHECKS)}')
@series_flags
@weight_flags
@option('levels', type=int, default=settings.verify.levels, help='levels K of the g_k check')
@option('size', type=int, default=None, help='Hankel block index N, blocks are (N+1) x (N+1)')
@option('interleave', type=bool, default=False, help='read the series in u = t^2 as even moments')
@option('shape', type=str, default='c', help='expansion shape for roundtrip and g-table checks')
def cmd_verify(opts, args, out):
    checks = [c.strip().lower() for c in opts.check if c.strip()]
    if not checks:
        raise ArgumentError(f'--check is required, one or more of {", ".join(CHECKS)}')
    unknown = [c for c in checks if c not in _CHECKERS]
    if unknown:
        raise ArgumentError(f'unknown check {", ".join(unknown)}; known: {", ".join(CHECKS)}')
    order = _order(opts, settings.verify.order)
    results = []
    for name in checks:
        report = _CHECKERS[name](opts, order)
        report['check'] = name
        SysLogger.info(f'verify {name}: {"pass" if report["ok"] else "FAIL"}')
        results.append(report)
    ok = all(r['ok'] for r in results)
    write(out, {'schema': SCHEMA, 'ok': ok, 'checks': results})
    return EXIT_OK if ok else EXIT_FAILED


# tables

@command('table', help='Jacobi-Rogers or Stieltjes-Rogers triangle')
@option('kind', type=str, default='J', help='J, S or Sprime')
@option('size', type=int, default=6, help='last row index N')
@option('family', type=str, default=None, help='weights from the fraction of a catalog family')
@option('params', type=str, default='', help='family parameters')
@weight_flags
def cmd_table(opts, args, out):
    kind = {'j': 'J', 's': 'S', 'sprime': 'Sprime', "s'": 'Sprime'}.get(opts.kind.lower())
    if kind is None:
        raise ArgumentError(f'--kind must be J, S or Sprime, got {opts.kind!r}')
    if opts.size < 0:
        raise ArgumentError(f'--size must be >= 0, got {opts.size}')
    if opts.symbolic and not opts.mode:
        opts.mode = MOTZKIN if kind == 'J' else DYCK
    w = weights_from_options(opts, opts.size)
    if kind == 'J':
        if w.mode != MOTZKIN:
            raise ArgumentError('the J table needs Motzkin weights (--betas and --gammas)')
        table = jacobi_rogers_table(w, opts.size)
    else:
        if w.mode != DYCK:
            raise ArgumentError(f'the {kind} table needs Dyck weights (--alphas)')
        S, Sp = stieltjes_tables(w, opts.size)
        table = S if kind == 'S' else Sp
    write(out, {'schema': SCHEMA, 'kind': table.kind, 'size': table.size,
                'domain': table.domain.descriptor, 'rows': table.encode()})
    return EXIT_OK


# moments

@command('moments', help='first negative S-fraction coefficient of a moment sequence')
@option('input', type=str, default=None, help='series document, - for standard input')
@option('family', type=str, default='moment_probe', help='catalog family name')
@option('params', type=str, default='', help='family parameters, e.g. eps=1/2')
@option('budget', type=int, default=None, help='number of moments after a_0 to use')
def cmd_moments(opts, args, out):
    if opts.input:
        opts.family = None
    if opts.family and opts.budget is None:
        raise ArgumentError('--budget is required with --family')
    a, doc = series_from_options(opts, opts.budget)
    start = utime.perf_ms()
    result = stieltjes_positivity_scan(a)
    ms = utime.elapsed_ms(start)
    write(out, {'schema': SCHEMA, 'budget': a.order, 'digest': input_digest(doc),
                'result': result.as_dict(a.domain), 'ms': round(ms, 3)})
    return EXIT_OK


# catalog

@command('catalog', help='catalog list | catalog generate --family <name> --order N')
@option('family', type=str, default=None, help='catalog family name')
@option('params', type=str, default='', help='family parameters')
@option('order', type=int, default=None, help='truncation order N')
def cmd_catalog(opts, args, out):
    action = args[0] if args else 'list'
    if action == 'list':
        entries = []
        for name, fam in sorted(families().items()):
            entry = fam.as_dict()
            entry['gk'] = name in GK_FAMILIES
            entries.append(entry)
        write(out, {'schema': SCHEMA, 'families': entries})
        return EXIT_OK
    if action == 'generate':
        if not opts.family:
            raise ArgumentError('catalog generate needs --family')
        if opts.order is None:
            raise ArgumentError('catalog generate needs --order')
        f, doc = series_from_options(opts, _order(opts, 0))
        fam = get_family(opts.family)
        w = family_weights(fam.name, parse_params(opts.params))
        extra = {'family': fam.name, 'params': doc['params'], 'digest': input_digest(doc),
                 'pattern': fam.pattern(parse_params(opts.params)).text,
                 'variable': fam.variable, 'path_mode': w.mode if w is not None else None}
        write(out, series_document(f, **extra))
        return EXIT_OK
    raise ArgumentError(f'unknown catalog action {action!r}, expected list or generate')
