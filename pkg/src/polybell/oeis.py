"""OEIS search client with recorded-fixture replay for hermetic tests.

Look-ups are strictly advisory: the result is a list of candidate sequence
ids with names, never a claim that a candidate is "the" match.  In fixture
mode the response bytes come from a directory of recorded files keyed by
the query terms; live mode hits the search endpoint (override the base URL
with POLYBELL_OEIS_URL).  Live responses are mirrored into the cache
directory when one is configured, and later look-ups prefer the cache.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import requests

from .config import Settings

TRANSFORMS = ("none", "unsigned", "shift")
MIN_TERMS = 4


class OeisNetworkError(RuntimeError):
    """Raised when the live endpoint cannot be reached in time."""


class OeisFixtureError(RuntimeError):
    """Raised when fixture mode has no recording for a query."""


@dataclass(frozen=True)
class OeisQuery:
    terms: tuple[int, ...]
    transform: str = "none"

    def __post_init__(self) -> None:
        if len(self.terms) < MIN_TERMS:
            raise ValueError(f"need at least {MIN_TERMS} terms, got {len(self.terms)}")
        if self.transform not in TRANSFORMS:
            raise ValueError(f"unknown transform {self.transform!r}")

    def applied_terms(self) -> tuple[int, ...]:
        if self.transform == "unsigned":
            return tuple(abs(t) for t in self.terms)
        if self.transform == "shift":
            return self.terms[1:]
        return self.terms


@dataclass(frozen=True)
class OeisCandidate:
    oeis_id: str
    name: str


@dataclass(frozen=True)
class OeisResult:
    query: OeisQuery
    applied_terms: tuple[int, ...]
    source: str  # "fixture" | "cache" | "live"
    candidates: tuple[OeisCandidate, ...]


def terms_key(terms: tuple[int, ...]) -> str:
    """Filesystem-safe key for a term tuple ("m" marks a minus sign)."""
    return "_".join(str(t).replace("-", "m") for t in terms)


def parse_response(raw: bytes) -> tuple[OeisCandidate, ...]:
    """Extract candidates from a search response document.

    Accepts both the classic ``{"results": [...]}`` envelope and a bare
    list; a missing or null result list means no matches.
    """
    doc = json.loads(raw.decode("utf-8"))
    if isinstance(doc, dict):
        entries = doc.get("results") or []
    elif isinstance(doc, list):
        entries = doc
    else:
        raise ValueError("unrecognized response document")
    candidates = []
    for entry in entries:
        number = entry.get("number")
        if number is None:
            continue
        candidates.append(
            OeisCandidate(oeis_id=f"A{int(number):06d}", name=str(entry.get("name", "")))
        )
    return tuple(candidates)


def _fixture_file(directory: Path, terms: tuple[int, ...]) -> Path:
    return directory / f"{terms_key(terms)}.json"


def _fetch_live(terms: tuple[int, ...], settings: Settings) -> bytes:
    query = ",".join(str(t) for t in terms)
    try:
        response = requests.get(
            settings.oeis_url,
            params={"q": query, "fmt": "json"},
            timeout=settings.timeout_ms / 1000.0,
        )
        response.raise_for_status()
    except requests.RequestException as exc:
        raise OeisNetworkError(f"OEIS request failed: {exc}") from exc
    return response.content


def lookup(query: OeisQuery, settings: Settings, live: bool = False) -> OeisResult:
    """Resolve a query via fixtures, the response cache, or the live API.

    Precedence: recorded fixture, then cache hit, then (only when ``live``)
    the network.  A cache directory, when configured, stores live responses
    for replay.
    """
    terms = query.applied_terms()

    if settings.fixtures_dir is not None:
        path = _fixture_file(settings.fixtures_dir, terms)
        if path.is_file():
            return OeisResult(
                query=query,
                applied_terms=terms,
                source="fixture",
                candidates=parse_response(path.read_bytes()),
            )
        if not live:
            raise OeisFixtureError(f"no recorded fixture {path}")

    if settings.cache_dir is not None:
        cached = _fixture_file(settings.cache_dir, terms)
        if cached.is_file():
            return OeisResult(
                query=query,
                applied_terms=terms,
                source="cache",
                candidates=parse_response(cached.read_bytes()),
            )

    if not live:
        raise OeisFixtureError(
            "no fixture available and live mode not requested (pass --live)"
        )

    raw = _fetch_live(terms, settings)
    if settings.cache_dir is not None:
        settings.cache_dir.mkdir(parents=True, exist_ok=True)
        _fixture_file(settings.cache_dir, terms).write_bytes(raw)
    return OeisResult(
        query=query,
        applied_terms=terms,
        source="live",
        candidates=parse_response(raw),
    )
