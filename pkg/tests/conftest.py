"""Shared fixtures: every test runs against an empty settings directory."""

import pytest
from hypothesis import HealthCheck, settings

from gasketgraph.config import ENV_OVERRIDES

settings.register_profile(
    "gasketgraph",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("gasketgraph")


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("GASKETGRAPH_HOME", str(tmp_path / "home"))
    for env_var in ENV_OVERRIDES.values():
        monkeypatch.delenv(env_var, raising=False)
    return tmp_path / "home"
