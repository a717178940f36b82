"""Discogs master-release client: cached, rate-limited credit fetching.

The HTTP transport is injectable so tests run entirely on canned payloads.
The cache stores the verbatim response body, one JSON file per release id,
which means a parser fix never forces a re-crawl: delete nothing, rerun,
and every id is a cache hit. Credits are taken from the release-level
artist list (role defaulting to "Main Artist"), the release-level extra
artists, and every track's extra artists, deduplicated per
(collaborator, album, role string).
"""

from __future__ import annotations

import json
import os
import time
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import requests

from albumnet.errors import ConfigError
from albumnet.records import (
    YEAR_MAX,
    YEAR_MIN,
    AssociationRecord,
    Dataset,
    dedup_records,
)

API_ROOT = "https://api.discogs.com"
TOKEN_ENV_VAR = "DISCOGS_TOKEN"
USER_AGENT = "albumnet/0.1"
MAIN_ARTIST_ROLE = "Main Artist"

_MAX_ATTEMPTS = 3


class TransportError(Exception):
    """A transport-level failure; ``retryable`` gates retry behaviour."""

    retryable = True


class NotFoundError(TransportError):
    retryable = False


class Transport(Protocol):
    requires_auth: bool

    def fetch(self, release_id: str, token: str | None) -> bytes: ...


class HttpTransport:
    """Real Discogs API transport for the masters endpoint."""

    requires_auth = True

    def __init__(self, session: requests.Session | None = None):
        self._session = session or requests.Session()

    def fetch(self, release_id: str, token: str | None) -> bytes:
        headers = {"User-Agent": USER_AGENT}
        if token:
            headers["Authorization"] = f"Discogs token={token}"
        try:
            response = self._session.get(
                f"{API_ROOT}/masters/{release_id}", headers=headers, timeout=30
            )
        except requests.RequestException as exc:
            raise TransportError(f"connection error: {exc}") from exc
        if response.status_code == 404:
            raise NotFoundError("not found")
        if response.status_code != 200:
            raise TransportError(f"http {response.status_code}")
        return response.content


class RateLimiter:
    """Sliding-window limiter: <= per_minute acquisitions in any 60 s span.

    Clock and sleep are injectable so tests can drive time forward without
    waiting.
    """

    def __init__(self, per_minute: int, clock=time.monotonic, sleep=time.sleep):
        if per_minute < 1:
            raise ConfigError("requests_per_minute must be >= 1")
        self._per_minute = per_minute
        self._clock = clock
        self._sleep = sleep
        self._stamps: deque[float] = deque()

    def acquire(self) -> None:
        now = self._clock()
        while len(self._stamps) >= self._per_minute:
            wait = 60.0 - (now - self._stamps[0])
            if wait > 0:
                self._sleep(wait)
                now = self._clock()
            else:
                self._stamps.popleft()
        self._stamps.append(now)


@dataclass(frozen=True)
class FetchPlan:
    release_ids: tuple[str, ...]
    cache_dir: Path
    requests_per_minute: int = 25
    auth_token: str | None = None


@dataclass(frozen=True)
class FetchReport:
    fetched: int
    cache_hits: int
    failures: tuple[tuple[str, str], ...]

    def to_dict(self) -> dict:
        return {
            "fetched": self.fetched,
            "cache_hits": self.cache_hits,
            "failures": [
                {"id": release_id, "reason": reason}
                for release_id, reason in self.failures
            ],
        }


def _atomic_write(path: Path, body: bytes) -> None:
    tmp = path.parent / (path.name + ".tmp")
    tmp.write_bytes(body)
    os.replace(tmp, path)


def _fetch_with_retries(transport, limiter, release_id, token):
    """Returns the body, or the failure reason string after bounded retries."""
    reason = "unknown transport error"
    for _ in range(_MAX_ATTEMPTS):
        limiter.acquire()
        try:
            return transport.fetch(release_id, token), None
        except TransportError as exc:
            reason = str(exc) or exc.__class__.__name__
            if not exc.retryable:
                break
    return None, reason


def _credit_entries(payload: dict):
    for artist in payload.get("artists") or []:
        if isinstance(artist, dict):
            yield artist, artist.get("role") or MAIN_ARTIST_ROLE
    for extra in payload.get("extraartists") or []:
        if isinstance(extra, dict):
            yield extra, extra.get("role")
    for track in payload.get("tracklist") or []:
        if not isinstance(track, dict):
            continue
        for extra in track.get("extraartists") or []:
            if isinstance(extra, dict):
                yield extra, extra.get("role")


def records_from_master(release_id: str, body: bytes) -> list[AssociationRecord]:
    """Turn one cached master-release payload into association records.

    Raises ValueError on malformed payloads; credit entries lacking an id,
    a name, or a role string are skipped.
    """
    try:
        payload = json.loads(body)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid json: {exc.msg}") from None
    if not isinstance(payload, dict):
        raise ValueError("payload is not a JSON object")
    title = payload.get("title")
    if not isinstance(title, str) or not title:
        raise ValueError("missing field 'title'")
    year = payload.get("year")
    release_year = (
        year
        if isinstance(year, int)
        and not isinstance(year, bool)
        and YEAR_MIN <= year <= YEAR_MAX
        else None
    )
    main_artist = ", ".join(
        artist["name"]
        for artist in payload.get("artists") or []
        if isinstance(artist, dict) and isinstance(artist.get("name"), str)
    )
    records = []
    seen: set[tuple[str, str]] = set()
    for entry, role in _credit_entries(payload):
        entry_id = entry.get("id")
        name = entry.get("name")
        if entry_id in (None, "") or not isinstance(name, str) or not name:
            continue
        if not isinstance(role, str) or not role:
            continue
        collaborator_id = str(entry_id)
        key = (collaborator_id, role)
        if key in seen:
            continue
        seen.add(key)
        records.append(
            AssociationRecord(
                album_id=release_id,
                album_title=title,
                main_artist=main_artist,
                release_year=release_year,
                collaborator_id=collaborator_id,
                collaborator_name=name,
                role_raw=role,
            )
        )
    if not records:
        raise ValueError("no credited collaborators in payload")
    return records


def fetch_releases(
    plan: FetchPlan,
    transport: Transport | None = None,
    clock=time.monotonic,
    sleep=time.sleep,
) -> tuple[Dataset, FetchReport]:
    """Fetch every release in the plan, reading the cache first.

    A cached id never touches the network. Failures (HTTP errors after
    bounded retries, malformed payloads) are collected per id and the rest
    of the plan continues. Raises ConfigError when an authenticated
    transport has uncached work but no token is available from the plan or
    the DISCOGS_TOKEN environment variable.
    """
    if transport is None:
        transport = HttpTransport()
    cache_dir = Path(plan.cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    token = plan.auth_token or os.environ.get(TOKEN_ENV_VAR)
    uncached = [
        release_id
        for release_id in plan.release_ids
        if not (cache_dir / f"{release_id}.json").exists()
    ]
    if uncached and getattr(transport, "requires_auth", False) and not token:
        raise ConfigError(
            f"no auth token: set {TOKEN_ENV_VAR} or FetchPlan.auth_token"
        )
    limiter = RateLimiter(plan.requests_per_minute, clock=clock, sleep=sleep)
    records: list[AssociationRecord] = []
    fetched = 0
    cache_hits = 0
    failures: list[tuple[str, str]] = []
    for release_id in plan.release_ids:
        cache_path = cache_dir / f"{release_id}.json"
        if cache_path.exists():
            body = cache_path.read_bytes()
            cache_hits += 1
        else:
            body, reason = _fetch_with_retries(transport, limiter, release_id, token)
            if body is None:
                failures.append((release_id, reason))
                continue
            _atomic_write(cache_path, body)
            fetched += 1
        try:
            records.extend(records_from_master(release_id, body))
        except ValueError as exc:
            failures.append((release_id, str(exc)))
    unique, dropped = dedup_records(records)
    dataset = Dataset.from_records(unique, duplicates_dropped=dropped)
    return dataset, FetchReport(
        fetched=fetched, cache_hits=cache_hits, failures=tuple(failures)
    )
