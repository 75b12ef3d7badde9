#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exception classes

Every error carries a stable string ``code`` and a ``data`` mapping so the
command line can print it as a machine-readable object.
"""


class CFracError(Exception):
    """Base class of every cfrac error"""
    code = 'cfrac_error'

    def __init__(self, msg='error', code=None, **data):
        super(CFracError, self).__init__(msg)
        self.msg = msg
        if code is not None:
            self.code = code
        self.data = data

    @property
    def partial(self):
        return self.data.get('partial')

    def as_dict(self):
        data = {}
        for key, value in self.data.items():
            if hasattr(value, 'as_dict'):
                value = value.as_dict()
            data[key] = value
        return {
            'error': type(self).__name__,
            'msg': self.msg,
            'code': self.code,
            'data': data,
        }


class ArgumentError(CFracError):
    """Arguments error"""
    code = 'argument_error'


class ConfigError(CFracError):
    """raise config error"""
    code = 'config_error'


class ParseError(ArgumentError):
    """coefficient text could not be read in the requested domain"""
    code = 'parse_error'


# coefficient domains

class DomainMismatch(CFracError):
    code = 'domain_mismatch'


class DivisionByZero(CFracError):
    code = 'division_by_zero'


class NonExactDivision(CFracError):
    """the quotient does not lie in the coefficient ring"""
    code = 'non_exact_division'


# truncated series

class NonUnitConstantTerm(CFracError):
    code = 'non_unit_constant_term'


class NonzeroLowCoefficients(CFracError):
    code = 'nonzero_low_coefficients'


class OrderUnderflow(CFracError):
    code = 'order_underflow'


class ConstantTermViolation(CFracError):
    code = 'constant_term_violation'


# expansions

class StrictShapeViolation(CFracError):
    code = 'strict_shape_violation'


class BadGMinus1(CFracError):
    code = 'bad_g_minus_1'


class InconsistentExtension(CFracError):
    code = 'inconsistent_extension'


class InsufficientDepth(CFracError):
    code = 'insufficient_depth'


class ShapeMismatch(CFracError):
    code = 'shape_mismatch'


class SingularPivot(CFracError):
    code = 'singular_pivot'


class BadConstantTerm(CFracError):
    code = 'bad_constant_term'


class PEncountered(CFracError):
    """a partial numerator with exponent above one turned up during a scan"""
    code = 'p_encountered'


# paths and catalog

class SizeLimit(CFracError):
    code = 'size_limit'


class IndexOutOfRange(CFracError):
    code = 'index_out_of_range'


class TableSelfTestFailed(CFracError):
    code = 'table_self_test_failed'


class UnknownFamily(CFracError):
    code = 'unknown_family'


class BadParams(CFracError):
    code = 'bad_params'


class BenchMismatch(CFracError):
    """primitive and refined runs disagreed, no timing is reported"""
    code = 'bench_mismatch'
