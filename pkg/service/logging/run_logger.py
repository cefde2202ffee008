"""
Run Logger

One log file per enumeration run, written to a log directory as
``<run_id>.log``. Records and summaries carry JSON metadata so a run can be
read back with ``read_entries``.
"""
import json
from datetime import datetime
from enum import Enum
from logging import getLogger
from pathlib import Path
from threading import Lock
from typing import Any, Dict, List, Optional, Sequence

from service.utils.utils import format_timestamp, utc_now

logger = getLogger(__name__)


class RunLogLevel(str, Enum):
    """Levels of run log entries."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    RECORD = "RECORD"     # One enumerated key sequence
    SUMMARY = "SUMMARY"   # Final counts


class RunLogEntry:
    """A single run log entry."""

    def __init__(
        self,
        level: RunLogLevel,
        message: str,
        timestamp: Optional[datetime] = None,
        metadata: Optional[Dict[str, Any]] = None
    ):
        self.level = level
        self.message = message
        self.timestamp = timestamp or utc_now()
        self.metadata = metadata or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "timestamp": self.timestamp.isoformat(),
            "level": self.level.value,
            "message": self.message,
            "metadata": self.metadata
        }

    def to_line(self) -> str:
        """Format: [timestamp] [LEVEL   ] message | {metadata}"""
        meta_str = ""
        if self.metadata:
            meta_str = f" | {json.dumps(self.metadata, ensure_ascii=False, sort_keys=True)}"
        return f"[{format_timestamp(self.timestamp)}] [{self.level.value:8}] {self.message}{meta_str}\n"


def parse_line(line: str) -> Optional[Dict[str, Any]]:
    """Inverse of ``RunLogEntry.to_line``; None for header and blank lines."""
    if not (line.startswith('[') and '] [' in line):
        return None
    ts_str, rest = line.split('] [', 1)
    level_end = rest.find(']')
    if level_end <= 0:
        return None
    level = rest[:level_end].strip()
    message = rest[level_end + 2:].rstrip('\n')
    metadata: Dict[str, Any] = {}
    if ' | ' in message:
        text, meta_str = message.rsplit(' | ', 1)
        try:
            metadata = json.loads(meta_str)
            message = text
        except json.JSONDecodeError:
            pass
    return {"timestamp": ts_str[1:], "level": level, "message": message, "metadata": metadata}


class RunLogger:
    """
    Per-run logger.

    Features:
    - Header block with run id, parameters and start time
    - One RECORD line per emitted key sequence
    - Thread-safe writes; the last 1000 entries are cached in memory
    """

    def __init__(
        self,
        run_id: str,
        logs_dir: Path,
        parameters: Optional[Dict[str, Any]] = None
    ):
        self.run_id = run_id
        self.parameters = parameters or {}
        self._logs_dir = Path(logs_dir)
        self._logs_dir.mkdir(parents=True, exist_ok=True)
        self._log_file = self._logs_dir / f"{run_id}.log"

        self._lock = Lock()
        self._log_cache: List[RunLogEntry] = []
        self._max_cache_size = 1000

        self._write_header()

    @property
    def log_file(self) -> Path:
        return self._log_file

    def _write_header(self):
        header = (
            f"{'=' * 80}\n"
            f"Run ID: {self.run_id}\n"
            f"Parameters: {json.dumps(self.parameters, ensure_ascii=False, sort_keys=True)}\n"
            f"Started: {format_timestamp(utc_now())}\n"
            f"{'=' * 80}\n\n"
        )
        with self._lock:
            with open(self._log_file, 'a', encoding='utf-8') as f:
                f.write(header)

    def _write_entry(self, entry: RunLogEntry):
        with self._lock:
            with open(self._log_file, 'a', encoding='utf-8') as f:
                f.write(entry.to_line())
            self._log_cache.append(entry)
            if len(self._log_cache) > self._max_cache_size:
                self._log_cache = self._log_cache[-self._max_cache_size:]

    def log(
        self,
        level: RunLogLevel,
        message: str,
        metadata: Optional[Dict[str, Any]] = None
    ):
        self._write_entry(RunLogEntry(level=level, message=message, metadata=metadata))

    def info(self, message: str, metadata: Optional[Dict[str, Any]] = None):
        self.log(RunLogLevel.INFO, message, metadata)

    def warning(self, message: str, metadata: Optional[Dict[str, Any]] = None):
        self.log(RunLogLevel.WARNING, message, metadata)

    def error(self, message: str, metadata: Optional[Dict[str, Any]] = None):
        self.log(RunLogLevel.ERROR, message, metadata)

    def record(self, omegas: Sequence[int], flags: Dict[str, Any]):
        """Log one enumerated key sequence with its classification flags."""
        text = "(" + ",".join(str(w) for w in omegas) + ")"
        self.log(RunLogLevel.RECORD, text, {"key_sequence": list(omegas), **flags})

    def summary(self, counts: Dict[str, int]):
        self.log(RunLogLevel.SUMMARY, f"{counts.get('emitted', 0)} records", dict(counts))

    def get_entries(
        self,
        limit: int = 100,
        level: Optional[RunLogLevel] = None
    ) -> List[Dict[str, Any]]:
        """Most recent cached entries, optionally filtered by level."""
        with self._lock:
            entries = self._log_cache
            if level:
                entries = [e for e in entries if e.level == level]
            return [e.to_dict() for e in entries[-limit:]]

    def close(self):
        footer = (
            f"\n{'=' * 80}\n"
            f"Run Ended: {format_timestamp(utc_now())}\n"
            f"{'=' * 80}\n"
        )
        with self._lock:
            with open(self._log_file, 'a', encoding='utf-8') as f:
                f.write(footer)


def read_entries(path: Path, level: Optional[RunLogLevel] = None) -> List[Dict[str, Any]]:
    """Parse a run log file back into entry dictionaries."""
    entries = []
    try:
        with open(path, 'r', encoding='utf-8') as f:
            for line in f:
                parsed = parse_line(line)
                if parsed is None:
                    continue
                if level and parsed["level"] != level.value:
                    continue
                entries.append(parsed)
    except OSError as e:
        logger.error(f"Failed to read run log {path}: {e}")
    return entries


def new_run_id(prefix: str = "enumerate") -> str:
    return f"{prefix}-{utc_now().strftime('%Y%m%dT%H%M%S%fZ')}"
