#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
JSON documents of the command line

Every exact value travels as the coefficient text of its domain; every
document carries ``"schema": "cfrac/1"``.

    series input   {"domain": {...}, "coeffs": ["1", "1/2", ...], "order": N}
    family input   {"family": "bell", "params": {"x": "sym"}, "order": N}
"""
import re
import sys
import json
from dataclasses import dataclass
from typing import Optional

from ..catalog import SeriesSpec
from ..catalog import generate
from ..coeffs import RATIONALS
from ..coeffs import PolynomialRing
from ..coeffs import RationalFunctionField
from ..coeffs import domain_from_descriptor
from ..config import settings
from ..exception import ArgumentError
from ..expand import CFraction
from ..expand import CFTerm
from ..expand import ExpansionShape
from ..expand import Inconclusive
from ..expand import Terminated
from ..series import TruncatedSeries
from ..utils.func import digest

SCHEMA = settings.schema

_DOMAIN_RE = re.compile(r'^QQ(?:\[(?P<ring>[^\]]*)\]|\((?P<field>[^)]*)\))?$')


def parse_domain(text):
    """'QQ', 'QQ[x,y]' or 'QQ(q)'"""
    m = _DOMAIN_RE.match((text or 'QQ').replace(' ', ''))
    if not m:
        raise ArgumentError(f'bad domain {text!r}, expected QQ, QQ[x,...] or QQ(q)')
    if m.group('ring') is not None:
        return PolynomialRing(*[v for v in m.group('ring').split(',') if v])
    if m.group('field') is not None:
        return RationalFunctionField(m.group('field'))
    return RATIONALS


def dumps(doc, pretty=True):
    return json.dumps(doc, indent=2 if pretty else None, sort_keys=False, default=str)


def write(out, doc):
    out.write(dumps(doc))
    out.write('\n')


def read_document(path):
    """the JSON document at ``path`` ('-' is standard input)"""
    try:
        if path == '-':
            text = sys.stdin.read()
        else:
            with open(path, encoding='utf-8') as f:
                text = f.read()
    except OSError as e:
        raise ArgumentError(f'cannot read {path}: {e.strerror}')
    try:
        return json.loads(text)
    except ValueError as e:
        raise ArgumentError(f'{path} is not valid JSON: {e}')


def _coeff_values(coeffs):
    for c in coeffs:
        if isinstance(c, bool) or not isinstance(c, (int, str)):
            raise ArgumentError(f'coefficients are integers or text, not {c!r}')
    return coeffs


def load_series(doc, order=None):
    """
    (series, canonical input document) of a series or family document; a bare
    list is read as rational coefficients
    """
    if isinstance(doc, list):
        doc = {'coeffs': doc}
    if not isinstance(doc, dict):
        raise ArgumentError('an input document must be a JSON object or list')
    if 'family' in doc:
        spec = SeriesSpec.from_dict(doc)
        if order is not None:
            spec.order = order
        return generate(spec), spec.as_dict()
    if 'coeffs' not in doc:
        raise ArgumentError('an input document needs "coeffs" or "family"')
    domain = domain_from_descriptor(doc.get('domain') or RATIONALS.descriptor)
    coeffs = doc['coeffs']
    if not isinstance(coeffs, list) or not coeffs:
        raise ArgumentError('"coeffs" must be a nonempty list')
    f = TruncatedSeries.from_values(domain, _coeff_values(coeffs))
    if order is None:
        order = doc.get('order', f.order)
    try:
        order = int(order)
    except (TypeError, ValueError):
        raise ArgumentError(f'bad order {order!r}')
    if not 0 <= order <= f.order:
        raise ArgumentError(f'order {order} needs coefficients 0..{order}, {len(coeffs)} given')
    f = f.truncate(order)
    return f, {'domain': domain.descriptor, 'coeffs': f.encode(), 'order': order}


def load_g_minus1(path, domain, order):
    """g_-1 from a coefficient document or list, over the domain of f"""
    doc = read_document(path)
    coeffs = doc.get('coeffs') if isinstance(doc, dict) else doc
    if not isinstance(coeffs, list) or not coeffs:
        raise ArgumentError(f'{path} holds no coefficient list')
    g = TruncatedSeries.from_values(domain, _coeff_values(coeffs))
    return TruncatedSeries.polynomial(domain, g.coeffs, order)


def series_document(f, **extra):
    doc = {'schema': SCHEMA, 'domain': f.domain.descriptor, 'coeffs': f.encode(), 'order': f.order}
    doc.update(extra)
    return doc


# expansions

def encode_status(status):
    return status.as_dict()


def decode_status(data):
    kind = data.get('kind')
    if kind == Terminated.kind:
        return Terminated(int(data['k']), int(data['witness']))
    if kind == Inconclusive.kind:
        return Inconclusive(int(data['remaining']))
    raise ArgumentError(f'unknown status {kind!r}')


def encode_cfraction(cf):
    enc = cf.domain.encode
    return {
        'domain': cf.domain.descriptor,
        'alpha0': enc(cf.alpha0),
        'terms': cf.encode_terms(),
        'status': encode_status(cf.status),
        'tail_delta': [enc(d) for d in cf.tail_delta],
        'remainder': [enc(r) for r in cf.remainder],
    }


def decode_cfraction(data):
    try:
        domain = domain_from_descriptor(data['domain'])
        parse = domain.convert
        terms = tuple(CFTerm(tuple(parse(d) for d in t['delta']), parse(t['alpha']), int(t['p']))
                      for t in data['terms'])
        return CFraction(domain, parse(data['alpha0']), terms, decode_status(data['status']),
                         tuple(parse(d) for d in data.get('tail_delta', ())),
                         tuple(parse(r) for r in data.get('remainder', ())))
    except (KeyError, TypeError) as e:
        raise ArgumentError(f'malformed expansion document: {e}')


@dataclass
class ExpansionReport:
    cf: CFraction
    digest: str
    ms: float
    algorithm: str = 'refined'
    shape: Optional[ExpansionShape] = None
    order: Optional[int] = None

    def as_dict(self):
        doc = {'schema': SCHEMA}
        doc.update(encode_cfraction(self.cf))
        doc.update({
            'determined_order': self.cf.determined_order(),
            'algorithm': self.algorithm,
            'shape': self.shape.as_dict() if self.shape is not None else None,
            'order': self.order,
            'digest': self.digest,
            'ms': round(self.ms, 3),
        })
        return doc

    @classmethod
    def from_dict(cls, data):
        if data.get('schema') != SCHEMA:
            raise ArgumentError(f'expected schema {SCHEMA}, got {data.get("schema")!r}')
        shape = data.get('shape')
        return cls(decode_cfraction(data), data.get('digest', ''), float(data.get('ms', 0)),
                   data.get('algorithm', 'refined'),
                   ExpansionShape.from_dict(shape) if shape else None, data.get('order'))

    def as_text(self):
        cf = self.cf
        enc = cf.domain.encode
        lines = ['%s;%s' % (enc(cf.alpha0), ','.join(enc(a) for a in cf.alphas))]
        if any(t.delta for t in cf.terms):
            lines.append('delta: ' + ' | '.join(','.join(enc(d) for d in t.delta) for t in cf.terms))
        if any(t.p != 1 for t in cf.terms):
            lines.append('p: ' + ','.join(str(t.p) for t in cf.terms))
        if cf.tail_delta:
            lines.append('tail delta: ' + ','.join(enc(d) for d in cf.tail_delta))
        status = cf.status.as_dict()
        lines.append(' '.join(f'{k}={v}' for k, v in status.items()))
        lines.append(f'domain={cf.domain} digest={self.digest} ms={self.ms:.3f}')
        return '\n'.join(lines)


def input_digest(doc):
    return digest(doc)


def encode_error(e):
    """the error object of a CFracError, with any partial expansion encoded"""
    doc = e.as_dict()
    if isinstance(e.partial, CFraction):
        doc['data']['partial'] = encode_cfraction(e.partial)
    return {'schema': SCHEMA, 'error': doc}
