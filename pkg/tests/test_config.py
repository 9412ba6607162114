import importlib
import logging

import pytest

from fs_lab.config import DEFAULT_ORIGINS, get_settings, load_settings


def test_defaults(monkeypatch):
    for name in ("FS_LAB_THREADS", "FS_LAB_ORDER", "API_PREFIX", "CORS_ORIGINS"):
        monkeypatch.delenv(name, raising=False)
    settings = load_settings()
    assert settings.threads == 0
    assert settings.order == 16
    assert settings.log_level is None
    assert settings.logging_level("WARNING") == "WARNING"
    assert settings.logging_level("INFO") == "INFO"
    assert settings.api_prefix == "/api"
    assert settings.cors_origins == DEFAULT_ORIGINS
    assert settings.worker_count() >= 1


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("FS_LAB_THREADS", "3")
    monkeypatch.setenv("FS_LAB_ORDER", "64")
    monkeypatch.setenv("FS_LAB_LOG_LEVEL", "debug")
    monkeypatch.setenv("CORS_ORIGINS", "https://a.example, https://b.example")
    settings = load_settings()
    assert settings.worker_count() == 3
    assert settings.order == 64
    assert settings.logging_level("INFO") == "DEBUG"
    assert settings.cors_origins == ["https://a.example", "https://b.example"]


@pytest.mark.parametrize(
    "name,value",
    [("FS_LAB_THREADS", "many"), ("FS_LAB_THREADS", "-1"), ("FS_LAB_ORDER", "2"), ("FS_LAB_LOG_LEVEL", "LOUD")],
)
def test_rejects_bad_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(RuntimeError, match=name):
        load_settings()


def test_cached(monkeypatch):
    first = get_settings()
    monkeypatch.setenv("FS_LAB_ORDER", "99")
    assert get_settings() is first
    get_settings.cache_clear()
    assert get_settings().order == 99


@pytest.mark.parametrize("env,expected", [(None, "INFO"), ("debug", "DEBUG"), ("ERROR", "ERROR")])
def test_app_log_level(monkeypatch, env, expected):
    import fs_lab.main

    if env is None:
        monkeypatch.delenv("FS_LAB_LOG_LEVEL", raising=False)
    else:
        monkeypatch.setenv("FS_LAB_LOG_LEVEL", env)
    get_settings.cache_clear()
    seen = {}
    monkeypatch.setattr(logging, "basicConfig", lambda **kw: seen.update(kw))
    importlib.reload(fs_lab.main)
    assert seen["level"] == expected
