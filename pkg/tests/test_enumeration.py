import pytest

from service.config import EnumerationConfig
from service.enumeration import (
    EnumerationFilter,
    EnumerationRequest,
    Enumerator,
    check_bounds,
    enumerate_records,
    iter_surface_sequences,
    parse_filters,
)
from service.exceptions import BoundExceeded, UsageError
from service.logging import RunLogger, RunLogLevel, read_entries


def test_parse_filters():
    assert parse_filters([" G2A ", "del-pezzo"]) == (EnumerationFilter.G2A, EnumerationFilter.DEL_PEZZO)
    with pytest.raises(UsageError):
        parse_filters(["smooth"])


def test_check_bounds():
    with pytest.raises(BoundExceeded):
        check_bounds(EnumerationRequest(max_omega0=201, max_len=3))
    with pytest.raises(BoundExceeded):
        check_bounds(EnumerationRequest(max_omega0=5, max_len=3, max_entry=10_001))
    with pytest.raises(UsageError):
        check_bounds(EnumerationRequest(max_omega0=5, max_len=1))
    with pytest.raises(UsageError):
        check_bounds(EnumerationRequest(max_omega0=0, max_len=3))
    with pytest.raises(UsageError):
        check_bounds(EnumerationRequest(max_omega0=5, max_len=3, workers=0))
    tight = EnumerationConfig(max_omega0_guard=4)
    with pytest.raises(BoundExceeded):
        check_bounds(EnumerationRequest(max_omega0=5, max_len=3), tight)


def test_only_the_plane_below_omega0_two():
    records, summary = enumerate_records(EnumerationRequest(max_omega0=1, max_len=3))
    assert [r.key_sequence for r in records] == [[1, 1]]
    assert (summary.scanned, summary.emitted) == (1, 1)
    assert summary.max_entry == 1


def test_del_pezzo_filter():
    request = EnumerationRequest(max_omega0=6, max_len=3, filters=(EnumerationFilter.DEL_PEZZO,))
    records, summary = enumerate_records(request)
    assert [r.key_sequence for r in records] == [[2, 1], [3, 2], [3, 2, 4], [3, 2, 5]]
    assert summary.emitted == 4
    assert summary.scanned > summary.emitted
    assert summary.filters == ["del-pezzo"]


def test_log_canonical_filter():
    request = EnumerationRequest(max_omega0=15, max_len=3, max_entry=24, filters=(EnumerationFilter.LC,))
    records, _ = enumerate_records(request)
    assert [15, 10, 24] in [r.key_sequence for r in records]
    assert all(r.singularity_class == "LogCanonicalNotLT" for r in records)


def test_filters_combine_with_and():
    request = EnumerationRequest(
        max_omega0=6, max_len=3, filters=(EnumerationFilter.G2A, EnumerationFilter.LT)
    )
    for record in enumerate_records(request)[0]:
        assert record.g2a and record.singularity_class == "LogTerminal"


def test_output_does_not_depend_on_worker_count():
    single, _ = enumerate_records(EnumerationRequest(max_omega0=6, max_len=3, workers=1))
    pooled, _ = enumerate_records(EnumerationRequest(max_omega0=6, max_len=3, workers=4))
    assert single == pooled


def test_sequences_come_in_enumeration_order():
    keys = [(len(s), *s.omegas) for s in iter_surface_sequences(EnumerationRequest(max_omega0=6, max_len=4, max_entry=12))]
    assert keys == sorted(keys)


def test_enumerator_summary_counts():
    enumerator = Enumerator(EnumerationRequest(max_omega0=4, max_len=3))
    assert not enumerator.finished
    records = list(enumerator)
    assert enumerator.finished
    summary = enumerator.summary
    assert summary.scanned == summary.emitted == len(records)
    assert summary.counts["g2a"] == sum(r.g2a for r in records)
    assert sum(summary.counts.get(c, 0) for c in ("LogTerminal", "LogCanonicalNotLT", "Neither")) == len(records)


def test_run_log_records_every_emitted_sequence(tmp_path):
    run_logger = RunLogger("run-1", tmp_path, {"max_omega0": 6})
    request = EnumerationRequest(max_omega0=6, max_len=3, filters=(EnumerationFilter.DEL_PEZZO,))
    records, summary = enumerate_records(request, run_logger)
    run_logger.close()

    logged = read_entries(run_logger.log_file, RunLogLevel.RECORD)
    assert [e["metadata"]["key_sequence"] for e in logged] == [r.key_sequence for r in records]
    [final] = read_entries(run_logger.log_file, RunLogLevel.SUMMARY)
    assert final["metadata"]["emitted"] == summary.emitted == 4
