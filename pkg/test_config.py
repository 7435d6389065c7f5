import logging

import pytest

import config
from exceptions import ConfigError


def test_defaults():
    assert config.get_log_level() == logging.WARNING
    assert config.get_candidate_radius() == 4
    assert config.get_so_irreducible_default() is True
    assert config.get_output_dir() == "output"


def test_environment_overrides_default(monkeypatch):
    monkeypatch.setenv("CALC_CANDIDATE_RADIUS", "6")
    monkeypatch.setenv("CALC_SO_IRREDUCIBLE", "no")
    assert config.get_candidate_radius() == 6
    assert config.get_so_irreducible_default() is False


def test_values_are_cached(monkeypatch):
    assert config.get_candidate_radius() == 4
    monkeypatch.setenv("CALC_CANDIDATE_RADIUS", "9")
    assert config.get_candidate_radius() == 4
    config.reset_settings()
    assert config.get_candidate_radius() == 9


def test_explicit_override_wins(monkeypatch):
    monkeypatch.setenv("CALC_LOG_LEVEL", "DEBUG")
    assert config.get_setting("CALC_LOG_LEVEL", override="ERROR") == "ERROR"


@pytest.mark.parametrize("key,value,getter", [
    ("CALC_CANDIDATE_RADIUS", "four", config.get_candidate_radius),
    ("CALC_CANDIDATE_RADIUS", "0", config.get_candidate_radius),
    ("CALC_LOG_LEVEL", "LOUD", config.get_log_level),
    ("CALC_SO_IRREDUCIBLE", "maybe", config.get_so_irreducible_default),
])
def test_invalid_values(monkeypatch, key, value, getter):
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigError, match=key):
        getter()


def test_unknown_key():
    with pytest.raises(ConfigError):
        config.get_setting("CALC_NOT_A_SETTING")


def test_ensure_dir(tmp_path):
    target = tmp_path / "out" / "nested"
    assert config.ensure_dir(str(target)) == str(target)
    assert target.is_dir()
