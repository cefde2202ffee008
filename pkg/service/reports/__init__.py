"""
Reports Module

pydantic records printed by the command line, and the builders that fill
them from engine results.

Public API
~~~~~~~~~~
- ValidationReport, SurfaceReport, ClassificationRecord, ActionRecord,
  VerificationRecord, ResolutionRecord, EnumerationRecord,
  EnumerationSummary, ThetaEquivalenceRecord

The builders (validation_report, surface_report, resolution_record, …) live
in ``service.reports.builders``; they import the engine, which itself
imports the models, so they are not re-exported here.
"""
from service.reports.models import (
    ActionRecord,
    ClassificationRecord,
    EnumerationRecord,
    EnumerationSummary,
    ErrorInfo,
    ResolutionRecord,
    SurfaceReport,
    ThetaEquivalenceRecord,
    ValidationReport,
    VerificationRecord,
)

__all__ = [
    'ActionRecord',
    'ClassificationRecord',
    'EnumerationRecord',
    'EnumerationSummary',
    'ErrorInfo',
    'ResolutionRecord',
    'SurfaceReport',
    'ThetaEquivalenceRecord',
    'ValidationReport',
    'VerificationRecord',
]
