"""Batch analysis: run every analyzer over the store and persist artifacts.

Artifacts are plain JSON files under one directory, written atomically
(tmp file + rename, manifest last). The manifest records hashes of the
corpus and of the resolved configuration; `run_analyze` is a no-op when
both match, and the server refuses to serve stale artifacts.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, replace
from pathlib import Path

from . import bundled, correlation, sentiment, textprep, topics
from .corpus import CategoryConfig, DocumentStore, Tweet, load_category_config
from .errors import ConfigError, EmptyStoreError, StaleArtifactsError
from .sentiment import CategoryAggregate, LexiconBundle, SentimentResult
from .timeutil import DAY_SECONDS, bucket_floor, iso_utc, parse_utc
from .topics import ExtractorResources, TopicIndex

MANIFEST = "manifest.json"
TOPIC_INDEX = "topic_index.json"
SENTIMENTS = "sentiments.json"
AGGREGATES = "aggregates.json"
TWEET_TOPICS = "tweet_topics.json"
COOCCURRENCE = "cooccurrence.json"
COOCCURRENCE_CATEGORY = "cooccurrence_category.json"
COOCCURRENCE_BUCKETS = "cooccurrence_buckets.json"
LOCATIONS = "locations.json"


@dataclass
class PipelineConfig:
    category_config: Path
    stopwords: Path
    sentiment_lexicon: Path
    emoticon_lexicon: Path
    acronyms: Path
    tagger_lexicon: Path
    store_dir: Path
    artifacts_dir: Path
    extractor: str = topics.RAKE
    neutral_band: float = sentiment.DEFAULT_NEUTRAL_BAND
    bucket_seconds: int = DAY_SECONDS
    top_n: int = 10

    @classmethod
    def default(
        cls,
        store_dir: str | Path = "store",
        artifacts_dir: str | Path | None = None,
        **overrides,
    ) -> "PipelineConfig":
        store_dir = Path(store_dir)
        cfg = cls(
            category_config=bundled.data_path(bundled.CATEGORY_CONFIG),
            stopwords=bundled.data_path(bundled.STOPWORDS),
            sentiment_lexicon=bundled.data_path(bundled.SENTIMENT_LEXICON),
            emoticon_lexicon=bundled.data_path(bundled.EMOTICONS),
            acronyms=bundled.data_path(bundled.ACRONYMS),
            tagger_lexicon=bundled.data_path(bundled.TAGGER_LEXICON),
            store_dir=store_dir,
            artifacts_dir=Path(artifacts_dir) if artifacts_dir else store_dir.parent / "artifacts",
        )
        return replace(cfg, **overrides) if overrides else cfg

    def validate(self):
        for name in (
            "category_config", "stopwords", "sentiment_lexicon",
            "emoticon_lexicon", "acronyms", "tagger_lexicon",
        ):
            path = getattr(self, name)
            if not Path(path).exists():
                raise ConfigError(f"configured {name.replace('_', ' ')} file missing: {path}")
        if self.neutral_band < 0:
            raise ConfigError("neutral band must be >= 0")
        if self.bucket_seconds <= 0:
            raise ConfigError("bucket duration must be positive")
        if self.top_n < 1:
            raise ConfigError("top-n must be >= 1")
        if self.extractor not in topics.EXTRACTOR_IDS:
            raise ConfigError(
                f"extractor must be one of {', '.join(topics.EXTRACTOR_IDS)}: got {self.extractor!r}"
            )

    def config_hash(self) -> str:
        h = hashlib.sha256()
        for name in (
            "category_config", "stopwords", "sentiment_lexicon",
            "emoticon_lexicon", "acronyms", "tagger_lexicon",
        ):
            h.update(Path(getattr(self, name)).read_bytes())
        settings = f"{self.extractor}|{self.neutral_band}|{self.bucket_seconds}|{self.top_n}"
        h.update(settings.encode())
        return h.hexdigest()


@dataclass
class Resources:
    """All loaded lexicons/taggers needed by the analysis chain."""

    config: PipelineConfig
    categories: CategoryConfig
    stopwords: textprep.StopwordList
    tagger: textprep.RuleLexiconTagger
    lexicons: LexiconBundle
    emoticons: frozenset[str]

    @classmethod
    def load(cls, config: PipelineConfig) -> "Resources":
        config.validate()
        emoticon_lexicon = sentiment.load_emoticon_lexicon(config.emoticon_lexicon)
        return cls(
            config=config,
            categories=load_category_config(config.category_config),
            stopwords=textprep.load_stopwords(config.stopwords),
            tagger=textprep.load_tagger(config.tagger_lexicon),
            lexicons=LexiconBundle(
                words=sentiment.load_word_lexicon(config.sentiment_lexicon),
                emoticons=emoticon_lexicon,
                acronyms=sentiment.load_acronyms(config.acronyms),
            ),
            emoticons=emoticon_lexicon.surfaces(),
        )

    def extractor_resources(self) -> ExtractorResources:
        return ExtractorResources(
            stopwords=self.stopwords, tagger=self.tagger, emoticons=self.emoticons
        )

    def analyze_text(self, text: str) -> SentimentResult:
        return sentiment.analyze_text(
            text,
            self.lexicons,
            self.stopwords,
            self.config.neutral_band,
            self.emoticons,
        )


def corpus_hash(store: DocumentStore) -> str:
    h = hashlib.sha256()
    for tweet in store.all_tweets():
        h.update(json.dumps(tweet.to_record(), sort_keys=True).encode())
    return h.hexdigest()


@dataclass
class AnalysisArtifacts:
    manifest: dict
    topic_index: TopicIndex
    sentiments: dict[str, SentimentResult]
    aggregates: list[CategoryAggregate]
    tweet_topics: dict[str, list[str]]
    matrix: correlation.CooccurrenceMatrix
    category_matrices: dict[str, correlation.CooccurrenceMatrix]
    bucket_matrices: dict[str, correlation.CooccurrenceMatrix]
    locations: list[dict]
    directory: Path | None = None


def _location_summary(tweets: list[Tweet]) -> list[dict]:
    groups: dict[str, dict] = {}
    for t in tweets:
        if not t.location or not t.location.place:
            continue
        g = groups.setdefault(t.location.place, {"count": 0, "lats": [], "lons": []})
        g["count"] += 1
        if t.location.lat is not None and t.location.lon is not None:
            g["lats"].append(t.location.lat)
            g["lons"].append(t.location.lon)
    out = []
    for place in sorted(groups, key=lambda p: (-groups[p]["count"], p)):
        g = groups[place]
        entry = {"place": place, "count": g["count"], "lat": None, "lon": None}
        if g["lats"]:
            entry["lat"] = round(sum(g["lats"]) / len(g["lats"]), 6)
            entry["lon"] = round(sum(g["lons"]) / len(g["lons"]), 6)
        out.append(entry)
    return out


def _write_json(path: Path, text: str):
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    os.replace(tmp, path)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def run_analyze(config: PipelineConfig, store: DocumentStore) -> AnalysisArtifacts:
    """Run the full analysis over the store and write artifacts atomically.

    Returns the existing artifacts untouched when the manifest already
    matches the current corpus and configuration.
    """
    if len(store) == 0:
        raise EmptyStoreError(f"store {store.directory} holds no tweets; ingest first")
    resources = Resources.load(config)
    manifest = {
        "corpus_hash": corpus_hash(store),
        "config_hash": config.config_hash(),
        "extractor": config.extractor,
        "bucket_seconds": config.bucket_seconds,
        "neutral_band": config.neutral_band,
        "tweet_count": len(store),
    }
    existing = Path(config.artifacts_dir) / MANIFEST
    if existing.exists():
        try:
            if json.loads(existing.read_text(encoding="utf-8")) == manifest:
                artifacts = load_artifacts(config.artifacts_dir)
                artifacts.manifest["up_to_date"] = True
                return artifacts
        except (json.JSONDecodeError, OSError, KeyError):
            pass  # unreadable artifacts are rebuilt

    with store.lock():
        tweets = store.all_tweets()
        ext_res = resources.extractor_resources()
        topic_index = topics.build_topic_index(tweets, config.extractor, ext_res)
        tweet_topics = {}
        sentiments = {}
        pairs = []
        for tweet in tweets:
            phrases = topics.extract_topics(tweet.text, config.extractor, ext_res)
            tweet_topics[tweet.id] = sorted({sp.phrase for sp in phrases})
            result = resources.analyze_text(tweet.text)
            sentiments[tweet.id] = result
            pairs.append((tweet, result))
        aggregates = sentiment.aggregate_category(pairs, config.bucket_seconds)
        matrix = correlation.build_cooccurrence(
            [(t.id, set(tweet_topics[t.id])) for t in tweets]
        )
        category_matrices = {}
        for category in resources.categories.names():
            members = [t for t in tweets if category in t.categories]
            category_matrices[category] = correlation.build_cooccurrence(
                [(t.id, set(tweet_topics[t.id])) for t in members]
            )
        bucket_matrices = {}
        by_bucket: dict[str, list] = {}
        for t in tweets:
            key = iso_utc(bucket_floor(t.created_at, config.bucket_seconds))
            by_bucket.setdefault(key, []).append((t.id, set(tweet_topics[t.id])))
        for key in sorted(by_bucket):
            bucket_matrices[key] = correlation.build_cooccurrence(by_bucket[key])
        locations = _location_summary(tweets)

        artifacts_dir = Path(config.artifacts_dir)
        artifacts_dir.mkdir(parents=True, exist_ok=True)
        _write_json(artifacts_dir / TOPIC_INDEX, topic_index.to_json())
        _write_json(
            artifacts_dir / SENTIMENTS,
            _dumps({tid: r.to_dict() for tid, r in sentiments.items()}),
        )
        _write_json(artifacts_dir / AGGREGATES, sentiment.dump_aggregates(aggregates))
        _write_json(artifacts_dir / TWEET_TOPICS, _dumps(tweet_topics))
        _write_json(artifacts_dir / COOCCURRENCE, matrix.to_json())
        _write_json(
            artifacts_dir / COOCCURRENCE_CATEGORY,
            _dumps({c: json.loads(m.to_json()) for c, m in category_matrices.items()}),
        )
        _write_json(
            artifacts_dir / COOCCURRENCE_BUCKETS,
            _dumps({k: json.loads(m.to_json()) for k, m in bucket_matrices.items()}),
        )
        _write_json(artifacts_dir / LOCATIONS, _dumps(locations))
        _write_json(artifacts_dir / MANIFEST, _dumps(manifest))  # manifest last

    return AnalysisArtifacts(
        manifest=manifest,
        topic_index=topic_index,
        sentiments=sentiments,
        aggregates=aggregates,
        tweet_topics=tweet_topics,
        matrix=matrix,
        category_matrices=category_matrices,
        bucket_matrices=bucket_matrices,
        locations=locations,
        directory=artifacts_dir,
    )


def load_artifacts(directory: str | Path) -> AnalysisArtifacts:
    """Read artifacts back from disk (raises if the manifest is missing)."""
    directory = Path(directory)
    manifest_path = directory / MANIFEST
    if not manifest_path.exists():
        raise StaleArtifactsError(f"no artifacts at {directory}; run analyze first")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    raw_sentiments = json.loads((directory / SENTIMENTS).read_text(encoding="utf-8"))
    sentiments = {
        tid: SentimentResult(
            score=r["score"],
            label=r["label"],
            evidence=[tuple(e) for e in r["evidence"]],
        )
        for tid, r in raw_sentiments.items()
    }
    raw_aggs = json.loads((directory / AGGREGATES).read_text(encoding="utf-8"))
    aggregates = [
        CategoryAggregate(
            category=a["category"],
            bucket_start=parse_utc(a["bucket_start"]),
            counts=(a["counts"]["positive"], a["counts"]["neutral"], a["counts"]["negative"]),
            percentages=(
                a["percentages"]["positive"],
                a["percentages"]["neutral"],
                a["percentages"]["negative"],
            ),
        )
        for a in raw_aggs
    ]
    raw_cat = json.loads((directory / COOCCURRENCE_CATEGORY).read_text(encoding="utf-8"))
    raw_buckets = json.loads((directory / COOCCURRENCE_BUCKETS).read_text(encoding="utf-8"))
    return AnalysisArtifacts(
        manifest=manifest,
        topic_index=TopicIndex.load(directory / TOPIC_INDEX),
        sentiments=sentiments,
        aggregates=aggregates,
        tweet_topics=json.loads((directory / TWEET_TOPICS).read_text(encoding="utf-8")),
        matrix=correlation.CooccurrenceMatrix.load(directory / COOCCURRENCE),
        category_matrices={
            c: correlation.CooccurrenceMatrix.from_json(json.dumps(m)) for c, m in raw_cat.items()
        },
        bucket_matrices={
            k: correlation.CooccurrenceMatrix.from_json(json.dumps(m))
            for k, m in raw_buckets.items()
        },
        locations=json.loads((directory / LOCATIONS).read_text(encoding="utf-8")),
        directory=directory,
    )


def check_artifacts_current(
    config: PipelineConfig, store: DocumentStore, artifacts: AnalysisArtifacts
):
    """Refuse stale artifacts: hashes must match the live store and config."""
    expected_corpus = corpus_hash(store)
    expected_config = config.config_hash()
    if artifacts.manifest.get("corpus_hash") != expected_corpus:
        raise StaleArtifactsError("artifacts were built from a different corpus; re-run analyze")
    if artifacts.manifest.get("config_hash") != expected_config:
        raise StaleArtifactsError("artifacts were built with a different configuration; re-run analyze")
