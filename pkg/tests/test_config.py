import json

import pytest

from gasketgraph.config import DEFAULT_SETTINGS, get_config_path, load_settings, save_setting
from gasketgraph.errors import ConfigError


def test_defaults(isolated_settings):
    assert load_settings() == DEFAULT_SETTINGS
    assert get_config_path() == isolated_settings / "config.json"


def test_file_overrides_defaults():
    get_config_path().parent.mkdir(parents=True)
    get_config_path().write_text(json.dumps({"max_level": 7}))
    assert load_settings()["max_level"] == 7


def test_environment_overrides_file(monkeypatch):
    save_setting("max_level", "7")
    monkeypatch.setenv("GASKET_MAX_LEVEL", "9")
    assert load_settings()["max_level"] == 9


def test_save_setting_persists():
    settings = save_setting("pebble_max_weight", "32")
    assert settings["pebble_max_weight"] == 32
    assert json.loads(get_config_path().read_text()) == {"pebble_max_weight": 32}


@pytest.mark.parametrize("value", ["abc", "0", "-3"])
def test_bad_environment_value(monkeypatch, value):
    monkeypatch.setenv("GASKET_VERIFY_WORKERS", value)
    with pytest.raises(ConfigError):
        load_settings()


def test_unknown_key():
    with pytest.raises(ConfigError):
        save_setting("colour", "3")


def test_corrupt_file():
    get_config_path().parent.mkdir(parents=True)
    get_config_path().write_text("{not json")
    with pytest.raises(ConfigError):
        load_settings()
    with pytest.raises(ConfigError):
        save_setting("max_level", "5")


def test_unknown_key_in_file():
    get_config_path().parent.mkdir(parents=True)
    get_config_path().write_text(json.dumps({"speed": 3}))
    with pytest.raises(ConfigError):
        load_settings()
