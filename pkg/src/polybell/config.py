"""Runtime settings with the precedence: flags > environment > file > defaults.

The config file is TOML; its path comes from POLYBELL_CONFIG, falling back
to ./polybell.toml when that exists.  Keys: oeis_url (env POLYBELL_OEIS_URL;
the endpoint override is deliberately environment-driven, there is no flag
for it), fixtures_dir (POLYBELL_FIXTURES), cache_dir (POLYBELL_CACHE_DIR),
timeout_ms (POLYBELL_TIMEOUT_MS) and format (POLYBELL_FORMAT).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

ENV_PREFIX = "POLYBELL_"
DEFAULT_OEIS_URL = "https://oeis.org/search"
DEFAULT_TIMEOUT_MS = 5000


@dataclass(frozen=True)
class Settings:
    oeis_url: str = DEFAULT_OEIS_URL
    fixtures_dir: Path | None = None
    cache_dir: Path | None = None
    timeout_ms: int = DEFAULT_TIMEOUT_MS
    format: str = "json"


_ENV_KEYS = {
    "oeis_url": "OEIS_URL",
    "fixtures_dir": "FIXTURES",
    "cache_dir": "CACHE_DIR",
    "timeout_ms": "TIMEOUT_MS",
    "format": "FORMAT",
}


def _coerce(name: str, raw: object) -> object:
    if raw is None:
        return None
    if name in ("fixtures_dir", "cache_dir"):
        return Path(str(raw))
    if name == "timeout_ms":
        return int(raw)
    return str(raw)


def _file_values(environ: dict[str, str]) -> dict[str, object]:
    path_text = environ.get(ENV_PREFIX + "CONFIG")
    path = Path(path_text) if path_text else Path("polybell.toml")
    if not path.is_file():
        return {}
    with path.open("rb") as handle:
        doc = tomllib.load(handle)
    return {f.name: doc[f.name] for f in fields(Settings) if f.name in doc}


def load_settings(
    overrides: dict[str, object] | None = None,
    environ: dict[str, str] | None = None,
) -> Settings:
    """Merge defaults, config file, environment and flag overrides."""
    env = dict(os.environ) if environ is None else environ
    merged: dict[str, object] = {}
    merged.update(_file_values(env))
    for name, suffix in _ENV_KEYS.items():
        raw = env.get(ENV_PREFIX + suffix)
        if raw is not None:
            merged[name] = raw
    if overrides:
        for name, value in overrides.items():
            if value is not None:
                merged[name] = value
    merged = {name: _coerce(name, value) for name, value in merged.items()}
    return Settings(**merged)
