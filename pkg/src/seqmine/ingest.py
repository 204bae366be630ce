"""Transaction loading and time-window sequence derivation.

The raw data is a flat table of (object_id, timestamp, item) records. Fixing
an inclusive day window turns it into a sequence database: one time-ordered
item sequence per object with at least one in-window record. Previews of
that derivation back the interactive window-tuning loop.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from datetime import date, datetime
from pathlib import Path
from typing import IO, Iterable, Mapping

from .core import Item, Sequence, format_pattern, item_key, parse_item

ObjectId = int | str

CSV_HEADER = ("object_id", "timestamp", "item")


class ParseError(ValueError):
    """A transaction row could not be parsed; message names the line."""


class EmptyInput(ValueError):
    """The transaction source contained no records."""


def parse_timestamp(token: str) -> datetime:
    """Parse an ISO-8601 date or date-time (day resolution minimum)."""
    try:
        return datetime.fromisoformat(token.strip())
    except ValueError as exc:
        raise ValueError(f"bad timestamp {token!r}: {exc}") from None


@dataclass(frozen=True)
class TransactionRecord:
    object_id: ObjectId
    timestamp: datetime
    item: Item


@dataclass(frozen=True)
class TransactionDb:
    """Immutable bag of transaction records plus its item/object universes."""

    records: tuple[TransactionRecord, ...]
    item_universe: frozenset[Item]
    object_universe: frozenset[ObjectId]

    @classmethod
    def from_records(cls, records: Iterable[TransactionRecord]) -> "TransactionDb":
        recs = tuple(records)
        return cls(
            records=recs,
            item_universe=frozenset(r.item for r in recs),
            object_universe=frozenset(r.object_id for r in recs),
        )

    def __len__(self) -> int:
        return len(self.records)

    def time_span(self) -> tuple[date, date] | None:
        """(earliest, latest) record date, or None for an empty db."""
        if not self.records:
            return None
        stamps = [r.timestamp.date() for r in self.records]
        return min(stamps), max(stamps)


@dataclass(frozen=True)
class TimeWindow:
    """Inclusive day interval [start, end] restricting which records count."""

    start: date
    end: date

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError(f"window start {self.start} is after end {self.end}")

    @property
    def days(self) -> int:
        """Interval length in whole days, end minus start."""
        return (self.end - self.start).days

    def contains(self, ts: datetime | date) -> bool:
        day = ts.date() if isinstance(ts, datetime) else ts
        return self.start <= day <= self.end

    @classmethod
    def parse(cls, start: str, end: str) -> "TimeWindow":
        return cls(date.fromisoformat(start), date.fromisoformat(end))


@dataclass(frozen=True)
class SequenceDatabase:
    """Per-object sequences derived under a frozen window.

    ``entries`` is ordered by object id; objects with no in-window records
    are absent, so ``object_count`` is the support denominator downstream.
    """

    entries: Mapping[ObjectId, Sequence]
    window: TimeWindow

    @property
    def interval_days(self) -> int:
        return self.window.days

    @property
    def object_count(self) -> int:
        return len(self.entries)

    def sequences(self) -> Iterable[Sequence]:
        return self.entries.values()


@dataclass(frozen=True)
class PreviewReport:
    """Sample rows plus whole-derivation stats for one candidate window."""

    sample: tuple[tuple[ObjectId, Sequence], ...]
    object_count: int
    min_length: int
    avg_length: float
    max_length: int
    distinct_items: int
    interval_days: int


def _object_key(obj: ObjectId):
    return (isinstance(obj, str), obj)


def load_transactions(source: str | Path | IO[str] | Iterable[str]) -> TransactionDb:
    """Ingest transaction CSV (header ``object_id,timestamp,item``).

    Raises :class:`EmptyInput` when there are no data rows and
    :class:`ParseError` (naming the line) on malformed rows.
    """
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as fh:
            return load_transactions(fh)

    reader = csv.reader(source)
    records: list[TransactionRecord] = []
    header_seen = False
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if not header_seen:
            header_seen = True
            if [c.strip().lower() for c in row] == list(CSV_HEADER):
                continue
            raise ParseError(
                f"line {lineno}: expected header {','.join(CSV_HEADER)!r}, got {row!r}"
            )
        if len(row) != 3:
            raise ParseError(f"line {lineno}: expected 3 fields, got {len(row)}")
        obj_tok, ts_tok, item_tok = (cell.strip() for cell in row)
        if not obj_tok:
            raise ParseError(f"line {lineno}: empty object_id")
        if not item_tok:
            raise ParseError(f"line {lineno}: empty item")
        if ":" in item_tok:
            raise ParseError(f"line {lineno}: item {item_tok!r} contains ':'")
        try:
            ts = parse_timestamp(ts_tok)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        records.append(TransactionRecord(parse_item(obj_tok), ts, parse_item(item_tok)))

    if not records:
        raise EmptyInput("no transaction records in input")
    return TransactionDb.from_records(records)


def derive_sequence_db(db: TransactionDb, window: TimeWindow) -> SequenceDatabase:
    """Project ``db`` onto ``window`` and group into per-object sequences.

    In-window records are ordered by (timestamp, item id); objects with no
    in-window record are dropped. Deterministic for a given (db, window).
    """
    grouped: dict[ObjectId, list[TransactionRecord]] = {}
    for rec in db.records:
        if window.contains(rec.timestamp):
            grouped.setdefault(rec.object_id, []).append(rec)

    entries: dict[ObjectId, Sequence] = {}
    for obj in sorted(grouped, key=_object_key):
        recs = sorted(grouped[obj], key=lambda r: (r.timestamp, item_key(r.item)))
        entries[obj] = tuple(r.item for r in recs)
    return SequenceDatabase(entries=entries, window=window)


def preview_sample(db: TransactionDb, window: TimeWindow, k: int) -> PreviewReport:
    """Derive under ``window`` and report the first ``k`` objects plus stats.

    The sample is the first k entries by sorted object id; stats cover the
    full derivation, not just the sample.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    seqdb = derive_sequence_db(db, window)
    sample = tuple(list(seqdb.entries.items())[:k])
    lengths = [len(s) for s in seqdb.sequences()]
    distinct = {x for s in seqdb.sequences() for x in s}
    return PreviewReport(
        sample=sample,
        object_count=seqdb.object_count,
        min_length=min(lengths) if lengths else 0,
        avg_length=sum(lengths) / len(lengths) if lengths else 0.0,
        max_length=max(lengths) if lengths else 0,
        distinct_items=len(distinct),
        interval_days=window.days,
    )


def write_sequence_csv(seqdb: SequenceDatabase, out: IO[str]) -> None:
    """Export ``object_id,interval_days,sequence`` rows (':'-joined sequences)."""
    writer = csv.writer(out)
    writer.writerow(["object_id", "interval_days", "sequence"])
    for obj, seq in seqdb.entries.items():
        writer.writerow([obj, seqdb.interval_days, format_pattern(seq)])


def write_transaction_csv(db: TransactionDb, out: IO[str]) -> None:
    """Export the transaction CSV format accepted by :func:`load_transactions`."""
    writer = csv.writer(out)
    writer.writerow(CSV_HEADER)
    for rec in db.records:
        ts = rec.timestamp
        stamp = ts.date().isoformat() if (ts.hour, ts.minute, ts.second, ts.microsecond) == (0, 0, 0, 0) else ts.isoformat()
        writer.writerow([rec.object_id, stamp, rec.item])
