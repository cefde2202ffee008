"""
Enumeration Module

Deterministic sweeps over surface key sequences, used by the ``enumerate``
command and the corpus-wide test suites.

Public API
~~~~~~~~~~
- EnumerationRequest, check_bounds: bounds of one run and their guards
- EnumerationFilter, parse_filters: g2a / del-pezzo / lt / lc
- iter_surface_sequences: primitive algebraic normal-form sequences in order
- Enumerator, enumerate_records: records plus an EnumerationSummary
"""
from service.enumeration.enumerator import (
    EnumerationFilter,
    EnumerationRequest,
    Enumerator,
    check_bounds,
    enumerate_records,
    enumeration_record,
    is_surface,
    iter_surface_sequences,
    parse_filters,
)

__all__ = [
    'EnumerationFilter',
    'EnumerationRequest',
    'Enumerator',
    'check_bounds',
    'enumerate_records',
    'enumeration_record',
    'is_surface',
    'iter_surface_sequences',
    'parse_filters',
]
