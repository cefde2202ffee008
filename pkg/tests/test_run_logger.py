from service.logging import RunLogEntry, RunLogger, RunLogLevel, new_run_id, parse_line, read_entries


def test_header_and_footer(tmp_path):
    run_logger = RunLogger("run-7", tmp_path, {"max_omega0": 6, "filters": ["g2a"]})
    run_logger.close()
    text = run_logger.log_file.read_text(encoding="utf-8")
    assert run_logger.log_file.name == "run-7.log"
    assert "Run ID: run-7" in text
    assert 'Parameters: {"filters": ["g2a"], "max_omega0": 6}' in text
    assert "Run Ended:" in text
    assert read_entries(run_logger.log_file) == []


def test_records_and_summary_read_back(tmp_path):
    run_logger = RunLogger("run-8", tmp_path)
    run_logger.info("starting")
    run_logger.record([3, 2, 5], {"g2a": True, "class": "LogTerminal"})
    run_logger.summary({"scanned": 10, "emitted": 1})
    run_logger.close()

    entries = read_entries(run_logger.log_file)
    assert [e["level"] for e in entries] == ["INFO", "RECORD", "SUMMARY"]
    record = entries[1]
    assert record["message"] == "(3,2,5)"
    assert record["metadata"] == {"key_sequence": [3, 2, 5], "g2a": True, "class": "LogTerminal"}
    assert entries[2]["message"] == "1 records"
    assert read_entries(run_logger.log_file, RunLogLevel.SUMMARY)[0]["metadata"]["scanned"] == 10


def test_cached_entries_filter_by_level(tmp_path):
    run_logger = RunLogger("run-9", tmp_path)
    run_logger.warning("slow")
    run_logger.record([2, 1], {})
    run_logger.record([3, 2], {})
    assert len(run_logger.get_entries()) == 3
    assert len(run_logger.get_entries(level=RunLogLevel.RECORD)) == 2
    assert run_logger.get_entries(limit=1)[0]["message"] == "(3,2)"


def test_parse_line():
    line = RunLogEntry(RunLogLevel.ERROR, "a | b").to_line()
    assert parse_line(line)["message"] == "a | b"
    assert parse_line(line)["metadata"] == {}
    assert parse_line("Run ID: x\n") is None
    assert parse_line("\n") is None


def test_missing_log_reads_as_empty(tmp_path):
    assert read_entries(tmp_path / "absent.log") == []


def test_new_run_id():
    assert new_run_id().startswith("enumerate-")
    assert new_run_id("sweep").startswith("sweep-")
