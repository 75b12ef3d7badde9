#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Timing the primitive and refined algorithms against each other

For every N both expansions are computed first and compared; nothing is
timed unless they agree. Each timing is the median of ``repeats`` runs after
``warmup`` discarded runs, sequential and single-threaded.
"""
import csv
import math
import statistics
from dataclasses import dataclass

from ..catalog import SeriesSpec
from ..catalog import generate
from ..catalog import parse_params
from ..config import settings
from ..exception import ArgumentError
from ..exception import BenchMismatch
from ..expand import ALGORITHMS
from ..expand import ExpansionShape
from ..expand import expand
from ..logger import SysLogger
from ..utils import utime
from .codec import encode_cfraction
from .command import command
from .command import option

HEADER = ('algorithm', 'family', 'N', 'ms', 'size-metric')


@dataclass
class BenchRecord:
    algorithm: str
    family: str
    N: int
    ms: float
    size_metric: int

    def as_row(self):
        return [self.algorithm, self.family, self.N, f'{self.ms:.3f}', self.size_metric]


def size_metric(f, cf):
    """
    peak coefficient size over the input and the expansion: bit size over
    QQ, total degree (numerator or denominator) over symbolic domains
    """
    domain = f.domain
    values = list(f.coeffs) + [cf.alpha0]
    for term in cf.terms:
        values.append(term.alpha)
        values.extend(term.delta)
    return max(domain.size(x) for x in values)


def time_expansion(f, shape, algorithm, repeats, warmup):
    for _ in range(warmup):
        expand(f, shape, algorithm)
    times = []
    for _ in range(repeats):
        start = utime.perf_ms()
        expand(f, shape, algorithm)
        times.append(utime.elapsed_ms(start))
    return statistics.median(times)


def run_bench(name, params, Ns, algorithms=ALGORITHMS, shape=None, repeats=None, warmup=None):
    """one BenchRecord per (N, algorithm), after the correctness gate"""
    shape = shape or ExpansionShape.sfraction()
    repeats = settings.bench.repeats if repeats is None else repeats
    warmup = settings.bench.warmup if warmup is None else warmup
    if repeats < 1:
        raise ArgumentError(f'--repeats must be >= 1, got {repeats}')
    records = []
    for N in Ns:
        f = generate(SeriesSpec(name, params, N))
        results = {algorithm: expand(f, shape, algorithm) for algorithm in algorithms}
        first = results[algorithms[0]]
        for algorithm, cf in results.items():
            if cf != first:
                raise BenchMismatch(f'{algorithm} and {algorithms[0]} disagree on {name} at N = {N}',
                                    family=name, N=N, algorithms={a: encode_cfraction(r) for a, r in results.items()})
        metric = size_metric(f, first)
        for algorithm in algorithms:
            ms = time_expansion(f, shape, algorithm, repeats, warmup)
            SysLogger.info(f'bench {algorithm} {name} N={N}: {ms:.1f} ms')
            records.append(BenchRecord(algorithm, name, N, ms, metric))
    return records


def write_plot(path, records):
    """log10(N) log10(ms) rows, one block per algorithm"""
    with open(path, 'w', encoding='utf-8') as f:
        for algorithm in dict.fromkeys(r.algorithm for r in records):
            f.write(f'# {algorithm}\n')
            for r in records:
                if r.algorithm == algorithm:
                    f.write(f'{math.log10(r.N):.6f} {math.log10(max(r.ms, 1e-6)):.6f}\n')
            f.write('\n\n')


@command('bench', help='CSV timings of the primitive and refined algorithms')
@option('family', type=str, default='factorial', help='factorial or rising_factorial')
@option('params', type=str, default='', help='family parameters; rising_factorial defaults to a=sym')
@option('Ns', type=int, multiple=True, help='orders, e.g. 100,200,500')
@option('algorithms', type=str, multiple=True, help='primitive, refined or both')
@option('shape', type=str, default='s', help='c, s, j or custom:<M list>')
@option('repeats', type=int, default=settings.bench.repeats, help='timed runs per point')
@option('warmup', type=int, default=settings.bench.warmup, help='discarded runs per point')
@option('emit_plot', type=str, default=None, help='write a log-log data file here')
def cmd_bench(opts, args, out):
    Ns = [n for n in opts.Ns]
    if not Ns or any(n < 0 for n in Ns):
        raise ArgumentError('--Ns needs one or more orders >= 0')
    algorithms = tuple(a.strip() for a in opts.algorithms if a.strip())
    if not algorithms or 'both' in algorithms:
        algorithms = ALGORITHMS
    unknown = [a for a in algorithms if a not in ALGORITHMS]
    if unknown:
        raise ArgumentError(f'unknown algorithm {", ".join(unknown)}')
    records = run_bench(opts.family, parse_params(opts.params), Ns, algorithms,
                        ExpansionShape.parse(opts.shape), opts.repeats, opts.warmup)
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(HEADER)
    for record in records:
        writer.writerow(record.as_row())
    if opts.emit_plot:
        write_plot(opts.emit_plot, records)
    return 0
