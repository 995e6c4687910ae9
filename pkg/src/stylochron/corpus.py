"""Corpus manifest loading and text cleaning.

Manifest format (UTF-8 CSV, paths relative to the manifest)::

    id,title,path,year,genre
    rj,Romeo and Juliet,texts/rj.txt,1596,tragedy
"""
from __future__ import annotations

import csv
import enum
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    DuplicateId,
    EncodingError,
    MarkerOrderError,
    MissingFile,
    SchemaError,
    StylochronError,
)

log = logging.getLogger(__name__)

MANIFEST_COLUMNS = ("id", "title", "path", "year", "genre")
YEAR_RANGE = (1000, 2999)
SHAKESPEARE_ERA = (1580, 1620)

_SPEAKER_LABEL = re.compile(r"(?=[^\n]*[A-Z])[A-Z '.]*\.")


class Genre(str, enum.Enum):
    COMEDY = "comedy"
    TRAGEDY = "tragedy"
    HISTORY = "history"
    OTHER = "other"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PlayRecord:
    id: str
    title: str
    path: Path
    year: int
    genre: Genre = Genre.UNKNOWN


@dataclass(frozen=True)
class Manifest:
    entries: tuple[PlayRecord, ...]
    source: str

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def by_id(self, doc_id: str) -> PlayRecord:
        for rec in self.entries:
            if rec.id == doc_id:
                return rec
        raise KeyError(doc_id)


@dataclass(frozen=True)
class CleaningRules:
    start_marker: str | None = None
    end_marker: str | None = None
    strip_speaker_labels: bool = False


@dataclass(frozen=True)
class CleanDocument:
    id: str
    text: str
    char_count: int
    line_count: int

    @classmethod
    def from_text(cls, doc_id: str, text: str) -> "CleanDocument":
        lines = text.count("\n") + 1 if text else 0
        return cls(id=doc_id, text=text, char_count=len(text), line_count=lines)


def _parse_year(raw: str, doc_id: str) -> int:
    try:
        year = int(raw.strip())
    except ValueError:
        raise ValueError(f"unparsable year {raw!r} for {doc_id!r}") from None
    if not YEAR_RANGE[0] <= year <= YEAR_RANGE[1]:
        raise ValueError(f"year {year} for {doc_id!r} outside {YEAR_RANGE}")
    if not SHAKESPEARE_ERA[0] <= year <= SHAKESPEARE_ERA[1]:
        log.warning("%s: year %d outside %d-%d", doc_id, year, *SHAKESPEARE_ERA)
    return year


def _parse_genre(raw: str | None, doc_id: str) -> Genre:
    value = (raw or "").strip().lower() or Genre.UNKNOWN.value
    try:
        return Genre(value)
    except ValueError:
        raise SchemaError(f"unknown genre {raw!r}", doc_id=doc_id) from None


def load_manifest(path: str | Path) -> Manifest:
    path = Path(path)
    base = path.parent
    with open(path, encoding="utf-8-sig", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        if not header:
            raise SchemaError(f"{path}: no header row")
        missing = [c for c in MANIFEST_COLUMNS if c not in header]
        if missing:
            raise SchemaError(f"{path}: missing column(s) {', '.join(missing)}")
        entries: list[PlayRecord] = []
        seen: set[str] = set()
        for row in reader:
            doc_id = (row["id"] or "").strip()
            if not doc_id:
                raise SchemaError(f"{path}:{reader.line_num}: empty id")
            if doc_id in seen:
                raise DuplicateId(f"duplicate id {doc_id!r}", doc_id=doc_id)
            seen.add(doc_id)
            text_path = base / (row["path"] or "").strip()
            if not text_path.is_file():
                raise MissingFile(f"text file not found: {text_path}", doc_id=doc_id)
            entries.append(
                PlayRecord(
                    id=doc_id,
                    title=(row["title"] or "").strip(),
                    path=text_path,
                    year=_parse_year(row["year"] or "", doc_id),
                    genre=_parse_genre(row["genre"], doc_id),
                )
            )
    return Manifest(entries=tuple(entries), source=str(path))


def clean_text(raw: str | bytes, rules: CleaningRules = CleaningRules(), doc_id: str = "") -> CleanDocument:
    """Normalize and trim a raw document.

    Order: UTF-8 decode, BOM removal, CRLF/CR to LF, marker extraction
    (text after the first start marker up to the last end marker, trimmed
    of surrounding whitespace), then optional speaker-label line removal.
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError(f"invalid UTF-8 at byte {exc.start}", doc_id=doc_id or None) from None
    text = raw.removeprefix("\ufeff").replace("\r\n", "\n").replace("\r", "\n")

    start = end = None
    if rules.start_marker:
        i = text.find(rules.start_marker)
        if i >= 0:
            start = i + len(rules.start_marker)
    if rules.end_marker:
        j = text.rfind(rules.end_marker)
        if j >= 0:
            end = j
    if start is not None and end is not None and start > end:
        raise MarkerOrderError("start marker occurs after end marker", doc_id=doc_id or None)
    if start is not None or end is not None:
        text = text[start:end].strip()

    if rules.strip_speaker_labels:
        kept = [ln for ln in text.split("\n") if not (len(ln) <= 40 and _SPEAKER_LABEL.fullmatch(ln))]
        text = "\n".join(kept)
    return CleanDocument.from_text(doc_id, text)


def read_document(record: PlayRecord, rules: CleaningRules) -> CleanDocument:
    try:
        raw = record.path.read_bytes()
    except OSError as exc:
        raise MissingFile(f"cannot read {record.path}: {exc.strerror}", doc_id=record.id) from None
    try:
        return clean_text(raw, rules, doc_id=record.id)
    except StylochronError as exc:
        exc.doc_id = exc.doc_id or record.id
        raise


def load_corpus(
    manifest: Manifest, rules: CleaningRules = CleaningRules(), jobs: int = 1
) -> list[tuple[PlayRecord, CleanDocument]]:
    """Read and clean every manifest entry, returned in manifest order."""
    if jobs > 1 and len(manifest) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            docs = list(pool.map(lambda rec: read_document(rec, rules), manifest.entries))
    else:
        docs = [read_document(rec, rules) for rec in manifest.entries]
    return list(zip(manifest.entries, docs))
