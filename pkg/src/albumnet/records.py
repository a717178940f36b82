"""Flat-file ingestion of (collaborator, album, role) association records.

One record is one role held by one collaborator on one album. A collaborator
holding two roles on the same album therefore contributes two records but a
single (album, collaborator) association; the Dataset keeps both counts.
Supported formats are CSV (exact header below) and JSON-lines with the same
field names, both UTF-8.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from albumnet.errors import ConfigError, EmptyDatasetError, ParseError

CSV_HEADER = (
    "album_id",
    "album_title",
    "main_artist",
    "release_year",
    "collaborator_id",
    "collaborator_name",
    "role_raw",
)

YEAR_MIN = 1900
YEAR_MAX = 2100

_FORMAT_ALIASES = {"csv": "csv", "jsonl": "jsonl", "json-lines": "jsonl"}


@dataclass(frozen=True)
class AssociationRecord:
    """One (collaborator, album, role) row; the atomic unit of ingestion.

    Ids are opaque strings and never interpreted as numbers. release_year
    is None when the source left it empty; such albums are skipped by the
    temporal growth analysis instead of being pinned to a fake year.
    """

    album_id: str
    album_title: str
    main_artist: str
    release_year: int | None
    collaborator_id: str
    collaborator_name: str
    role_raw: str


@dataclass(frozen=True)
class Dataset:
    """A validated record collection plus its distinct-key counts.

    association_count counts distinct (album, collaborator) pairs while
    role_instance_count counts records, so association_count <=
    role_instance_count always holds. duplicates_dropped reports how many
    fully identical input rows were collapsed during parsing; it is a
    warning counter, not part of dataset identity.
    """

    records: tuple[AssociationRecord, ...]
    album_count: int
    collaborator_count: int
    association_count: int
    role_instance_count: int
    duplicates_dropped: int = field(default=0, compare=False)

    @classmethod
    def from_records(
        cls, records: Iterable[AssociationRecord], duplicates_dropped: int = 0
    ) -> "Dataset":
        records = tuple(records)
        albums = {r.album_id for r in records}
        collaborators = {r.collaborator_id for r in records}
        pairs = {(r.album_id, r.collaborator_id) for r in records}
        return cls(
            records=records,
            album_count=len(albums),
            collaborator_count=len(collaborators),
            association_count=len(pairs),
            role_instance_count=len(records),
            duplicates_dropped=duplicates_dropped,
        )


@dataclass(frozen=True)
class DatasetSummary:
    collaborators_per_album: float
    roles_per_collaborator_in_album: float


def dedup_records(
    records: Iterable[AssociationRecord],
) -> tuple[list[AssociationRecord], int]:
    """Collapse fully identical records, preserving first-seen order."""
    seen: set[AssociationRecord] = set()
    unique: list[AssociationRecord] = []
    dropped = 0
    for record in records:
        if record in seen:
            dropped += 1
            continue
        seen.add(record)
        unique.append(record)
    return unique, dropped


def parse_records(stream: IO[bytes] | IO[str], format: str = "csv") -> Dataset:
    """Parse a byte stream of association records into a Dataset.

    Fully identical rows collapse to one (counted in duplicates_dropped);
    rows differing only in role_raw are all kept. Malformed rows raise
    ParseError with the line number and field name; an unknown format tag
    raises ConfigError. Deterministic: the same bytes always produce an
    equal Dataset.
    """
    try:
        fmt = _FORMAT_ALIASES[format]
    except KeyError:
        raise ConfigError(f"unknown input format {format!r}") from None
    data = stream.read()
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(0, "input", f"not valid UTF-8: {exc}") from None
    else:
        text = data
    rows = _iter_csv(text) if fmt == "csv" else _iter_jsonl(text)
    unique, dropped = dedup_records(rows)
    return Dataset.from_records(unique, duplicates_dropped=dropped)


def _build_record(
    line_number: int,
    album_id: str,
    album_title: str,
    main_artist: str,
    release_year: object,
    collaborator_id: str,
    collaborator_name: str,
    role_raw: str,
) -> AssociationRecord:
    if not album_id:
        raise ParseError(line_number, "album_id", "must be non-empty")
    if not collaborator_id:
        raise ParseError(line_number, "collaborator_id", "must be non-empty")
    if not role_raw:
        raise ParseError(line_number, "role_raw", "must be non-empty")
    year: int | None = None
    if release_year not in (None, ""):
        if isinstance(release_year, bool) or not isinstance(release_year, (int, str)):
            raise ParseError(
                line_number, "release_year", f"not an integer: {release_year!r}"
            )
        try:
            year = int(release_year)
        except ValueError:
            raise ParseError(
                line_number, "release_year", f"not an integer: {release_year!r}"
            ) from None
        if not YEAR_MIN <= year <= YEAR_MAX:
            raise ParseError(
                line_number,
                "release_year",
                f"{year} outside [{YEAR_MIN}, {YEAR_MAX}]",
            )
    return AssociationRecord(
        album_id=album_id,
        album_title=album_title,
        main_artist=main_artist,
        release_year=year,
        collaborator_id=collaborator_id,
        collaborator_name=collaborator_name,
        role_raw=role_raw,
    )


def _iter_csv(text: str) -> Iterator[AssociationRecord]:
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(1, "header", "input is empty; expected the CSV header") from None
    if tuple(header) != CSV_HEADER:
        raise ParseError(1, "header", f"expected {','.join(CSV_HEADER)}")
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) != len(CSV_HEADER):
            raise ParseError(
                line, "row", f"expected {len(CSV_HEADER)} fields, got {len(row)}"
            )
        yield _build_record(line, *row)


def _iter_jsonl(text: str) -> Iterator[AssociationRecord]:
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(line_number, "json", exc.msg) from None
        if not isinstance(obj, dict):
            raise ParseError(line_number, "json", "each line must be a JSON object")
        for key in ("album_id", "collaborator_id", "role_raw"):
            if key not in obj:
                raise ParseError(line_number, key, "missing")
        values = {}
        for key in ("album_id", "album_title", "main_artist", "collaborator_id",
                    "collaborator_name", "role_raw"):
            value = obj.get(key, "")
            if not isinstance(value, str):
                raise ParseError(line_number, key, f"must be a string, got {value!r}")
            values[key] = value
        yield _build_record(
            line_number,
            values["album_id"],
            values["album_title"],
            values["main_artist"],
            obj.get("release_year"),
            values["collaborator_id"],
            values["collaborator_name"],
            values["role_raw"],
        )


def write_records_csv(dataset: Dataset, stream: IO[str]) -> None:
    """Write the exact ingest CSV schema; round-trips through parse_records."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in dataset.records:
        writer.writerow(
            (
                r.album_id,
                r.album_title,
                r.main_artist,
                "" if r.release_year is None else r.release_year,
                r.collaborator_id,
                r.collaborator_name,
                r.role_raw,
            )
        )


def dataset_summary(dataset: Dataset) -> DatasetSummary:
    """Per-album and per-association rates over a non-empty dataset."""
    if dataset.album_count == 0 or dataset.association_count == 0:
        raise EmptyDatasetError("summary ratios need a non-empty dataset")
    return DatasetSummary(
        collaborators_per_album=dataset.association_count / dataset.album_count,
        roles_per_collaborator_in_album=(
            dataset.role_instance_count / dataset.association_count
        ),
    )
