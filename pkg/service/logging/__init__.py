"""
Run Logging Module

File-backed logs of enumeration runs.
"""
from service.logging.run_logger import (
    RunLogEntry,
    RunLogger,
    RunLogLevel,
    new_run_id,
    parse_line,
    read_entries,
)

__all__ = ['RunLogEntry', 'RunLogger', 'RunLogLevel', 'new_run_id', 'parse_line', 'read_entries']
