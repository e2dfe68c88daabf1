"""Configuration management for gasketgraph."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import TypedDict

from gasketgraph.errors import ConfigError


class Settings(TypedDict):
    """Size ceilings and search budgets."""

    max_level: int
    domination_max_level: int
    gamma_k_max_level: int
    exhaustive_st_max_level: int
    pebble_max_vertices: int
    pebble_max_weight: int
    verify_workers: int


DEFAULT_SETTINGS: Settings = {
    "max_level": 12,
    "domination_max_level": 5,
    "gamma_k_max_level": 4,
    "exhaustive_st_max_level": 8,
    "pebble_max_vertices": 6,
    "pebble_max_weight": 64,
    "verify_workers": 4,
}

# Environment variables win over the config file
ENV_OVERRIDES = {
    "max_level": "GASKET_MAX_LEVEL",
    "domination_max_level": "GASKET_DOMINATION_MAX_LEVEL",
    "gamma_k_max_level": "GASKET_GAMMA_K_MAX_LEVEL",
    "exhaustive_st_max_level": "GASKET_EXHAUSTIVE_ST_MAX_LEVEL",
    "pebble_max_vertices": "GASKET_PEBBLE_MAX_VERTICES",
    "pebble_max_weight": "GASKET_PEBBLE_MAX_WEIGHT",
    "verify_workers": "GASKET_VERIFY_WORKERS",
}


def get_gasketgraph_dir() -> Path:
    """Get the gasketgraph config directory (~/.gasketgraph or $GASKETGRAPH_HOME)."""
    override = os.environ.get("GASKETGRAPH_HOME")
    if override:
        return Path(override)
    return Path.home() / ".gasketgraph"


def get_config_path() -> Path:
    """Get the config file path (~/.gasketgraph/config.json)."""
    return get_gasketgraph_dir() / "config.json"


def _coerce(key: str, value: object, source: str) -> int:
    try:
        number = int(value)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise ConfigError(f"{source}: {key} must be an integer, got {value!r}")
    if number < 1:
        raise ConfigError(f"{source}: {key} must be positive, got {number}")
    return number


def load_settings() -> Settings:
    """Load settings: defaults, then config.json, then environment variables."""
    settings: Settings = dict(DEFAULT_SETTINGS)  # type: ignore[assignment]

    config_path = get_config_path()
    if config_path.exists():
        try:
            with open(config_path, encoding="utf-8") as f:
                stored = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read {config_path}: {e}")
        if not isinstance(stored, dict):
            raise ConfigError(f"{config_path} must contain a JSON object")
        for key, value in stored.items():
            if key not in DEFAULT_SETTINGS:
                raise ConfigError(f"{config_path}: unknown setting {key!r}")
            settings[key] = _coerce(key, value, str(config_path))  # type: ignore[literal-required]

    for key, env_var in ENV_OVERRIDES.items():
        raw = os.environ.get(env_var)
        if raw is not None and raw.strip():
            settings[key] = _coerce(key, raw.strip(), env_var)  # type: ignore[literal-required]

    return settings


def save_setting(key: str, value: str) -> Settings:
    """Persist one setting to config.json and return the effective settings."""
    if key not in DEFAULT_SETTINGS:
        raise ConfigError(f"Unknown setting {key!r}; choose from {', '.join(DEFAULT_SETTINGS)}")
    number = _coerce(key, value, "config set")

    config_path = get_config_path()
    stored: dict[str, int] = {}
    if config_path.exists():
        try:
            with open(config_path, encoding="utf-8") as f:
                stored = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read {config_path}: {e}")
    stored[key] = number

    config_path.parent.mkdir(parents=True, exist_ok=True)
    with open(config_path, "w", encoding="utf-8") as f:
        json.dump(stored, f, indent=2)
    return load_settings()
