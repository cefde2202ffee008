"""
Enumeration of surface key sequences.

Walks every primitive, algebraic, normal-form key sequence within the
requested bounds in (length, ω_0, ω_1, …) order, computes one
``EnumerationRecord`` per sequence and keeps the ones accepted by every
filter. Per-sequence work fans out over a thread pool; results are merged
back in enumeration order.

Usage::

    request = EnumerationRequest(max_omega0=6, max_len=3, filters=(EnumerationFilter.DEL_PEZZO,))
    enumerator = Enumerator(request)
    records = list(enumerator)
    enumerator.summary.emitted   # 4
"""
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import islice
from logging import getLogger
from typing import Iterable, Iterator, List, Optional, Tuple

from service.classification import classify_record
from service.config.sub_config.engine.enumeration_config import EnumerationConfig
from service.exceptions import BoundExceeded, PreconditionError, UsageError
from service.key_sequence import KeySequence, iter_key_sequences, require_surface
from service.logging.run_logger import RunLogger
from service.reports.models import EnumerationRecord, EnumerationSummary
from service.surface import k_bar_x, m_omega

logger = getLogger(__name__)

# Work items handed to the pool at once, per worker
_BATCH_PER_WORKER = 16


class EnumerationFilter(str, Enum):
    G2A = "g2a"
    DEL_PEZZO = "del-pezzo"
    LT = "lt"
    LC = "lc"

    def accepts(self, record: EnumerationRecord) -> bool:
        if self is EnumerationFilter.G2A:
            return record.g2a
        if self is EnumerationFilter.DEL_PEZZO:
            return record.del_pezzo
        if self is EnumerationFilter.LT:
            return record.singularity_class == "LogTerminal"
        return record.singularity_class == "LogCanonicalNotLT"


def parse_filters(names: Iterable[str]) -> Tuple[EnumerationFilter, ...]:
    filters = []
    for name in names:
        try:
            filters.append(EnumerationFilter(name.strip().lower()))
        except ValueError:
            choices = ", ".join(f.value for f in EnumerationFilter)
            raise UsageError(f"unknown filter '{name}' (choose from {choices})")
    return tuple(filters)


@dataclass(frozen=True)
class EnumerationRequest:
    """Bounds of one run. ``max_entry`` defaults to ω_0² for each ω_0."""

    max_omega0: int
    max_len: int
    max_entry: Optional[int] = None
    filters: Tuple[EnumerationFilter, ...] = field(default_factory=tuple)
    workers: int = 1

    def entry_bound(self, omega0: int) -> int:
        # normal form gives ω_1 ≤ ω_0 and the smaller property ω_k < α_1⋯α_{k-1}ω_1 ≤ ω_0²
        natural = max(1, omega0 * omega0)
        return natural if self.max_entry is None else min(natural, self.max_entry)


def check_bounds(request: EnumerationRequest, config: Optional[EnumerationConfig] = None) -> EnumerationRequest:
    """Raise ``BoundExceeded`` when the request is outside the configured guards."""
    config = config or EnumerationConfig.get_default_instance()
    if request.max_omega0 < 1:
        raise UsageError(f"--max-omega0 must be ≥ 1, got {request.max_omega0}")
    if request.max_len < 2:
        raise UsageError(f"--max-len must be ≥ 2, got {request.max_len}")
    if request.max_omega0 > config.max_omega0_guard:
        raise BoundExceeded(
            f"max ω_0 = {request.max_omega0} exceeds the guard {config.max_omega0_guard}",
            {"bound": "max_omega0", "guard": config.max_omega0_guard},
        )
    if request.max_entry is not None and request.max_entry > config.max_entry_guard:
        raise BoundExceeded(
            f"max entry = {request.max_entry} exceeds the guard {config.max_entry_guard}",
            {"bound": "max_entry", "guard": config.max_entry_guard},
        )
    if not 1 <= request.workers <= 64:
        raise UsageError(f"--workers must lie in 1..64, got {request.workers}")
    return request


def is_surface(ks: KeySequence) -> bool:
    try:
        require_surface(ks)
    except PreconditionError:
        return False
    return True


def iter_surface_sequences(request: EnumerationRequest) -> Iterator[KeySequence]:
    """Primitive algebraic normal-form sequences within bounds, in enumeration order."""
    for length in range(2, request.max_len + 1):
        for omega0 in range(1, request.max_omega0 + 1):
            candidates = iter_key_sequences(
                max_omega0=omega0,
                max_len=length,
                max_entry=request.entry_bound(omega0),
                min_omega0=omega0,
                min_len=length,
                max_omega1=omega0,
            )
            for ks in candidates:
                if is_surface(ks):
                    yield ks


def enumeration_record(ks: KeySequence) -> EnumerationRecord:
    classification = classify_record(ks)
    return EnumerationRecord(
        key_sequence=list(ks.omegas),
        k_bar_x=k_bar_x(ks),
        m_omega=m_omega(ks),
        g2a=classification.g2a,
        singularity_class=classification.singularity_class,
        matched_row=classification.matched_row,
        del_pezzo=classification.del_pezzo,
    )


class Enumerator:
    """Iterate the records of one run; ``summary`` is ready once iteration ends."""

    def __init__(self, request: EnumerationRequest, run_logger: Optional[RunLogger] = None):
        self.request = request
        self.run_logger = run_logger
        self._scanned = 0
        self._emitted = 0
        self._counts: Counter = Counter()
        self._finished = False

    def __iter__(self) -> Iterator[EnumerationRecord]:
        logger.info(
            f"Enumerating ω_0 ≤ {self.request.max_omega0}, length ≤ {self.request.max_len} "
            f"with {self.request.workers} worker(s)"
        )
        if self.run_logger:
            self.run_logger.info("Enumeration started")

        sequences = iter_surface_sequences(self.request)
        batch_size = self.request.workers * _BATCH_PER_WORKER
        with ThreadPoolExecutor(max_workers=self.request.workers) as executor:
            while True:
                batch = list(islice(sequences, batch_size))
                if not batch:
                    break
                # map preserves input order
                for record in executor.map(enumeration_record, batch):
                    self._scanned += 1
                    self._tally(record)
                    if all(f.accepts(record) for f in self.request.filters):
                        self._emitted += 1
                        if self.run_logger:
                            self.run_logger.record(record.key_sequence, record.model_dump(exclude={"key_sequence"}))
                        yield record

        self._finished = True
        if self.run_logger:
            summary = self.summary
            self.run_logger.summary({**summary.counts, "scanned": summary.scanned, "emitted": summary.emitted})
        logger.info(f"Enumeration finished: {self._emitted} of {self._scanned} sequence(s) emitted")

    def _tally(self, record: EnumerationRecord) -> None:
        self._counts[record.singularity_class] += 1
        if record.g2a:
            self._counts["g2a"] += 1
        if record.del_pezzo:
            self._counts["del_pezzo"] += 1

    @property
    def finished(self) -> bool:
        return self._finished

    @property
    def summary(self) -> EnumerationSummary:
        return EnumerationSummary(
            max_omega0=self.request.max_omega0,
            max_len=self.request.max_len,
            max_entry=self.request.max_entry if self.request.max_entry is not None else self.request.max_omega0 ** 2,
            filters=[f.value for f in self.request.filters],
            scanned=self._scanned,
            emitted=self._emitted,
            counts=dict(sorted(self._counts.items())),
        )


def enumerate_records(
    request: EnumerationRequest, run_logger: Optional[RunLogger] = None
) -> Tuple[List[EnumerationRecord], EnumerationSummary]:
    enumerator = Enumerator(request, run_logger)
    records = list(enumerator)
    return records, enumerator.summary
