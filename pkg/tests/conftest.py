"""Shared fixtures."""

from pathlib import Path

import pytest

from src.config import get_settings

REPO_ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop the cached settings so monkeypatched environment variables take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def harness_config(monkeypatch):
    """Point the settings at the repository's suite defaults."""
    path = REPO_ROOT / "config" / "harness.yaml"
    monkeypatch.setenv("CONFIG_FILE", str(path))
    return path
