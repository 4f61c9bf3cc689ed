"""Tweet ingestion, category assignment, and the file-backed document store.

The store is an append-only directory of JSONL segment files plus a meta
file recording the category universe; the id index is rebuilt in memory
on open. Ingestion is single-writer (guarded by a lock file); queries
are pure reads and thread-safe once ingestion has finished.
"""

from __future__ import annotations

import json
import os
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path

from . import textprep
from .errors import ParseError, StoreError, UnknownCategoryError
from .timeutil import iso_utc, parse_utc


@dataclass(frozen=True)
class Location:
    place: str | None = None
    lat: float | None = None
    lon: float | None = None


@dataclass
class Tweet:
    id: str
    text: str
    created_at: datetime
    author: str
    hashtags: list[str] = field(default_factory=list)
    categories: set[str] = field(default_factory=set)
    location: Location | None = None
    language: str = "en"

    def to_record(self) -> dict:
        rec = {
            "id": self.id,
            "text": self.text,
            "created_at": iso_utc(self.created_at),
            "user": self.author,
            "hashtags": list(self.hashtags),
            "categories": sorted(self.categories),
            "lang": self.language,
        }
        if self.location:
            if self.location.place is not None:
                rec["place"] = self.location.place
            if self.location.lat is not None:
                rec["lat"] = self.location.lat
            if self.location.lon is not None:
                rec["lon"] = self.location.lon
        return rec


@dataclass(frozen=True)
class CategoryConfig:
    categories: dict[str, frozenset[str]]

    def __post_init__(self):
        if not self.categories:
            raise ParseError("category config defines zero categories")
        for name, tags in self.categories.items():
            if not tags:
                raise ParseError(f"category {name!r} has an empty hashtag set")

    def names(self) -> list[str]:
        return list(self.categories)

    def __contains__(self, name: str) -> bool:
        return name in self.categories


@dataclass
class IngestReport:
    records_read: int = 0
    records_stored: int = 0
    records_rejected: int = 0
    rejection_reasons: list[tuple[int, str]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "records_read": self.records_read,
            "records_stored": self.records_stored,
            "records_rejected": self.records_rejected,
            "rejection_reasons": [list(r) for r in self.rejection_reasons],
        }


@dataclass(frozen=True)
class TweetFilter:
    category: str | None = None
    time_from: datetime | None = None
    time_to: datetime | None = None
    location: str | None = None
    topic: str | None = None

    def __post_init__(self):
        if self.time_from and self.time_to and not self.time_from < self.time_to:
            raise ValueError("filter range requires from < to")


def load_category_config(path: str | Path) -> CategoryConfig:
    """Read a {category: [hashtags]} JSON file; hashtags are lowercased."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read category config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"category config {path.name} is not valid JSON: {exc.msg}",
            location=f"line {exc.lineno}, column {exc.colno}",
        ) from exc
    if not isinstance(raw, dict):
        raise ParseError(f"category config {path.name} must be a JSON object")
    categories = {}
    for name, tags in raw.items():
        if not isinstance(tags, list):
            raise ParseError("hashtag list expected", location=f"category {name!r}")
        cleaned = []
        for i, tag in enumerate(tags):
            if not isinstance(tag, str) or not tag.strip("#").strip():
                raise ParseError("bad hashtag entry", location=f"category {name!r}, index {i}")
            cleaned.append(tag.strip().lstrip("#").lower())
        categories[name] = frozenset(cleaned)
    return CategoryConfig(categories)


def assign_categories(tweet: Tweet, config: CategoryConfig) -> set[str]:
    """Categories whose hashtag sets intersect the tweet's hashtags."""
    tags = set(tweet.hashtags)
    matched = {name for name, cat_tags in config.categories.items() if cat_tags & tags}
    tweet.categories = matched
    return matched


def _normalize_hashtags(values) -> list[str]:
    seen = []
    for v in values:
        tag = str(v).strip().lstrip("#").lower()
        if tag and tag not in seen:
            seen.append(tag)
    return seen


def _hashtags_from_text(text: str) -> list[str]:
    tags = []
    for tok in textprep.tokenize(text):
        if tok.kind == textprep.HASHTAG and tok.inner not in tags:
            tags.append(tok.inner)
    return tags


def tweet_from_record(rec: dict) -> Tweet:
    """Build a Tweet from one parsed JSON record, validating required fields."""
    if not isinstance(rec, dict):
        raise ParseError("record is not a JSON object")
    for fld in ("id", "text", "created_at"):
        if not rec.get(fld):
            raise ParseError(f"missing field: {fld}")
    tweet_id = str(rec["id"])
    text = str(rec["text"])
    created = parse_utc(str(rec["created_at"]))
    hashtags = (
        _normalize_hashtags(rec["hashtags"])
        if isinstance(rec.get("hashtags"), list)
        else _hashtags_from_text(text)
    )
    location = None
    place = rec.get("place")
    lat, lon = rec.get("lat"), rec.get("lon")
    if place is not None or (lat is not None and lon is not None):
        location = Location(
            place=str(place) if place is not None else None,
            lat=float(lat) if lat is not None else None,
            lon=float(lon) if lon is not None else None,
        )
    return Tweet(
        id=tweet_id,
        text=text,
        created_at=created,
        author=str(rec.get("user", "")),
        hashtags=hashtags,
        categories=set(rec.get("categories", [])),
        location=location,
        language=str(rec.get("lang", "en")),
    )


class DocumentStore:
    """Append-only segment-file store with an in-memory id index."""

    META_NAME = "meta.json"
    LOCK_NAME = ".lock"

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._tweets: dict[str, Tweet] = {}
        self._categories: list[str] = []
        self._load()

    def _segment_paths(self) -> list[Path]:
        return sorted(self.directory.glob("segment-*.jsonl"))

    def _load(self):
        meta = self.directory / self.META_NAME
        if meta.exists():
            data = json.loads(meta.read_text(encoding="utf-8"))
            self._categories = list(data.get("categories", []))
        for seg in self._segment_paths():
            for lineno, line in enumerate(seg.read_text(encoding="utf-8").splitlines(), 1):
                if not line.strip():
                    continue
                try:
                    tweet = tweet_from_record(json.loads(line))
                except (json.JSONDecodeError, ParseError) as exc:
                    raise StoreError(f"corrupt segment {seg.name}:{lineno}: {exc}") from exc
                self._tweets[tweet.id] = tweet

    @contextmanager
    def lock(self):
        """Single-writer lock; analysis and ingestion both take it."""
        lock_path = self.directory / self.LOCK_NAME
        try:
            fd = os.open(lock_path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            raise StoreError(
                f"store {self.directory} is locked by another writer ({lock_path} exists)"
            ) from None
        try:
            os.write(fd, str(os.getpid()).encode())
            os.close(fd)
            yield
        finally:
            lock_path.unlink(missing_ok=True)

    def __contains__(self, tweet_id: str) -> bool:
        return tweet_id in self._tweets

    def __len__(self) -> int:
        return len(self._tweets)

    def get(self, tweet_id: str) -> Tweet | None:
        return self._tweets.get(tweet_id)

    def all_tweets(self) -> list[Tweet]:
        """Every stored tweet, ordered by (created_at, id)."""
        return sorted(self._tweets.values(), key=lambda t: (t.created_at, t.id))

    def known_categories(self) -> list[str]:
        if self._categories:
            return list(self._categories)
        seen = set()
        for t in self._tweets.values():
            seen.update(t.categories)
        return sorted(seen)

    def append_segment(self, tweets: list[Tweet], config: CategoryConfig | None = None):
        """Write one new segment file atomically and update the index."""
        if config is not None:
            merged = list(self._categories)
            for name in config.names():
                if name not in merged:
                    merged.append(name)
            self._categories = merged
            meta_tmp = self.directory / (self.META_NAME + ".tmp")
            meta_tmp.write_text(
                json.dumps({"categories": self._categories}, indent=2), encoding="utf-8"
            )
            os.replace(meta_tmp, self.directory / self.META_NAME)
        if not tweets:
            return
        seq = len(self._segment_paths()) + 1
        seg = self.directory / f"segment-{seq:05d}.jsonl"
        while seg.exists():
            seq += 1
            seg = self.directory / f"segment-{seq:05d}.jsonl"
        tmp = seg.with_suffix(".tmp")
        with tmp.open("w", encoding="utf-8") as fh:
            for t in tweets:
                fh.write(json.dumps(t.to_record(), sort_keys=True) + "\n")
        os.replace(tmp, seg)
        for t in tweets:
            self._tweets[t.id] = t


def ingest_jsonl(path: str | Path, config: CategoryConfig, store: DocumentStore) -> IngestReport:
    """Ingest one JSONL tweet file: normalize, categorize, append to the store.

    Malformed lines and duplicate ids are counted as rejections, never
    fatal. Blank lines are skipped without counting.
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read input file {path}: {exc}") from exc
    report = IngestReport()
    accepted: list[Tweet] = []
    batch_ids: set[str] = set()
    with store.lock():
        for lineno, line in enumerate(lines, 1):
            if not line.strip():
                continue
            report.records_read += 1
            try:
                tweet = tweet_from_record(json.loads(line))
            except json.JSONDecodeError as exc:
                report.records_rejected += 1
                report.rejection_reasons.append((lineno, f"invalid json: {exc.msg}"))
                continue
            except ParseError as exc:
                report.records_rejected += 1
                report.rejection_reasons.append((lineno, str(exc)))
                continue
            if tweet.id in store or tweet.id in batch_ids:
                report.records_rejected += 1
                report.rejection_reasons.append((lineno, "duplicate"))
                continue
            assign_categories(tweet, config)
            accepted.append(tweet)
            batch_ids.add(tweet.id)
            report.records_stored += 1
        store.append_segment(accepted, config)
    return report


def query_tweets(
    flt: TweetFilter,
    store: DocumentStore,
    config: CategoryConfig | None = None,
    topic_lookup=None,
) -> list[Tweet]:
    """All tweets matching every present filter field, ordered by (created_at, id).

    `topic_lookup` maps a topic phrase to the set of tweet ids carrying
    it (supplied from a built topic index); it is required when
    `flt.topic` is set.
    """
    if flt.category is not None:
        known = config.names() if config is not None else store.known_categories()
        if flt.category not in known:
            raise UnknownCategoryError(flt.category, known)
    topic_ids = None
    if flt.topic is not None:
        if topic_lookup is None:
            raise StoreError("topic filter requires a topic index (run analyze first)")
        topic_ids = set(topic_lookup(flt.topic))
    out = []
    for tweet in store.all_tweets():
        if flt.category is not None and flt.category not in tweet.categories:
            continue
        if flt.time_from is not None and tweet.created_at < flt.time_from:
            continue
        if flt.time_to is not None and tweet.created_at >= flt.time_to:
            continue
        if flt.location is not None:
            place = tweet.location.place if tweet.location else None
            if not place or flt.location.lower() not in place.lower():
                continue
        if topic_ids is not None and tweet.id not in topic_ids:
            continue
        out.append(tweet)
    return out
