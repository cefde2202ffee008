import json

import pytest
from pydantic import ValidationError

from service.config import (
    ConfigManager,
    EngineConfig,
    EnumerationConfig,
    RuntimeSettings,
    get_runtime_settings,
)
from service.exceptions import ParseError, UsageError


def test_defaults_are_written_on_first_load(tmp_path):
    manager = ConfigManager(tmp_path)
    engine = manager.load_config(EngineConfig)
    assert engine.is_valid()
    assert (tmp_path / "engine.json").exists()


def test_update_persists_and_reloads(tmp_path):
    ConfigManager(tmp_path).update_config("enumeration", {"workers": 8})
    saved = json.loads((tmp_path / "enumeration.json").read_text(encoding="utf-8"))
    assert saved["workers"] == 8

    reloaded = ConfigManager(tmp_path).get_config("enumeration")
    assert isinstance(reloaded, EnumerationConfig)
    assert reloaded.workers == 8


def test_invalid_update_is_rejected(tmp_path):
    manager = ConfigManager(tmp_path)
    with pytest.raises(UsageError):
        manager.update_config("enumeration", {"workers": 0})
    assert manager.get_config("enumeration").workers == 4


def test_unknown_config():
    with pytest.raises(UsageError):
        ConfigManager().get_config("nope")


def test_in_memory_manager_writes_nothing(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    manager = ConfigManager()
    assert not manager.persistent
    manager.update_config("enumeration", {"workers": 2})
    assert manager.get_config("enumeration").workers == 2
    assert list(tmp_path.iterdir()) == []


def test_corrupt_file_falls_back_to_defaults(tmp_path):
    (tmp_path / "enumeration.json").write_text("{not json", encoding="utf-8")
    assert ConfigManager(tmp_path).get_config("enumeration") == EnumerationConfig()


def test_parse_value():
    assert EnumerationConfig.parse_value("workers", "8") == 8
    with pytest.raises(ParseError):
        EnumerationConfig.parse_value("workers", "x")
    with pytest.raises(ParseError):
        EnumerationConfig.parse_value("colour", "red")


def test_all_configs_are_registered():
    names = [entry["name"] for entry in ConfigManager().get_all_configs()]
    assert names == ["engine", "enumeration", "output"]


# ============================================================================
# environment
# ============================================================================

def test_runtime_settings_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("G2A_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("G2A_CONFIG_DIR", str(tmp_path))
    get_runtime_settings.cache_clear()
    try:
        settings = get_runtime_settings()
        assert settings.log_level == "DEBUG"
        assert settings.config_dir == tmp_path
        assert settings.workers is None
    finally:
        get_runtime_settings.cache_clear()


def test_runtime_settings_validate_workers(monkeypatch):
    monkeypatch.setenv("G2A_WORKERS", "0")
    with pytest.raises(ValidationError):
        RuntimeSettings()


def test_select_fields_accept_only_their_options():
    manager = ConfigManager()
    with pytest.raises(UsageError):
        manager.update_config("output", {"dot_rankdir": "XY"})
    assert manager.update_config("output", {"dot_rankdir": "TB"}).dot_rankdir == "TB"
