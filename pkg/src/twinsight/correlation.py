"""Topic co-occurrence statistics with an IDF discount on popular topics.

Counting is tweet-level: co(a, b) is the number of tweets whose topic
set contains both a and b, df(t) the number containing t. The discount
is idf(t) = ln(N / df(t)), so a topic present in every tweet weighs
nothing. Query-centric ranking weighs co(a, b) * idf(b); the global
pair ranking weighs co(a, b) * idf(a) * idf(b).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from datetime import datetime
from itertools import combinations
from pathlib import Path

from .errors import UnknownTopicError
from .timeutil import bucket_floor, bucket_starts, iso_utc


@dataclass
class CooccurrenceMatrix:
    vocabulary: list[str] = field(default_factory=list)
    co: dict[tuple[str, str], int] = field(default_factory=dict)
    df: dict[str, int] = field(default_factory=dict)
    n: int = 0

    def co_count(self, a: str, b: str) -> int:
        if a == b:
            return 0
        key = (a, b) if a < b else (b, a)
        return self.co.get(key, 0)

    def neighbors(self, topic: str) -> dict[str, int]:
        """Topics co-occurring with `topic`, with raw counts."""
        out = {}
        for (a, b), count in self.co.items():
            if a == topic:
                out[b] = count
            elif b == topic:
                out[a] = count
        return out

    def to_json(self) -> str:
        pos = {t: i for i, t in enumerate(self.vocabulary)}
        rows = sorted([pos[a], pos[b], c] for (a, b), c in self.co.items())
        obj = {
            "n": self.n,
            "vocabulary": self.vocabulary,
            "df": dict(sorted(self.df.items())),
            "co": rows,
        }
        return json.dumps(obj, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "CooccurrenceMatrix":
        raw = json.loads(text)
        vocab = list(raw["vocabulary"])
        co = {}
        for i, j, count in raw["co"]:
            a, b = vocab[i], vocab[j]
            co[(a, b) if a < b else (b, a)] = count
        return cls(vocabulary=vocab, co=co, df=dict(raw["df"]), n=raw["n"])

    def dump(self, path: str | Path):
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "CooccurrenceMatrix":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class WeightedCorrelation:
    pair: tuple[str, str]
    count: int
    weight: float

    def to_dict(self) -> dict:
        return {"pair": list(self.pair), "count": self.count, "weight": self.weight}


@dataclass
class TrendSeries:
    pair: tuple[str, str]
    points: list[tuple[datetime, float]]

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "points": [
                {"bucket_start": iso_utc(ts), "weight": w} for ts, w in self.points
            ],
        }


def build_cooccurrence(topic_sets) -> CooccurrenceMatrix:
    """Count df and pairwise co-occurrence over (tweet id, topic set) pairs."""
    matrix = CooccurrenceMatrix()
    for _tweet_id, topics in topic_sets:
        matrix.n += 1
        unique = sorted(set(topics))
        for t in unique:
            matrix.df[t] = matrix.df.get(t, 0) + 1
        for a, b in combinations(unique, 2):
            matrix.co[(a, b)] = matrix.co.get((a, b), 0) + 1
    matrix.vocabulary = sorted(matrix.df)
    return matrix


def idf(matrix: CooccurrenceMatrix, topic: str) -> float:
    """ln(N / df); exactly 0 for a topic present in every tweet."""
    df = matrix.df.get(topic)
    if df is None:
        raise UnknownTopicError(topic)
    return math.log(matrix.n / df)


def weighted_correlates(
    matrix: CooccurrenceMatrix, topic: str, n: int
) -> list[WeightedCorrelation]:
    """Top-n topics correlated with `topic`, popularity-discounted.

    Ties break on raw count (descending) then phrase (ascending).
    """
    if topic not in matrix.df:
        raise UnknownTopicError(topic)
    if n < 1:
        raise ValueError("n must be >= 1")
    ranked = [
        WeightedCorrelation((topic, other), count, count * idf(matrix, other))
        for other, count in matrix.neighbors(topic).items()
    ]
    ranked.sort(key=lambda wc: (-wc.weight, -wc.count, wc.pair[1]))
    return ranked[:n]


def top_pairs(matrix: CooccurrenceMatrix, n: int) -> list[WeightedCorrelation]:
    """Global top-n pairs under the symmetric weight co * idf(a) * idf(b)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ranked = [
        WeightedCorrelation(pair, count, count * idf(matrix, pair[0]) * idf(matrix, pair[1]))
        for pair, count in matrix.co.items()
    ]
    ranked.sort(key=lambda wc: (-wc.weight, -wc.count, wc.pair))
    return ranked[:n]


def pair_weight(matrix: CooccurrenceMatrix, a: str, b: str) -> float:
    """Symmetric weight of one pair in one matrix; 0 if either topic is absent."""
    if a not in matrix.df or b not in matrix.df:
        return 0.0
    count = matrix.co_count(a, b)
    if count == 0:
        return 0.0
    return count * idf(matrix, a) * idf(matrix, b)


def trend_series(
    tweet_topics, pairs: list[tuple[str, str]], bucket_seconds: int
) -> list[TrendSeries]:
    """Per-bucket symmetric weights for the requested topic pairs.

    `tweet_topics` yields (tweet id, topic set, created_at). The corpus
    span is partitioned into contiguous buckets; a pair scores 0 in any
    bucket where either topic is absent.
    """
    if bucket_seconds <= 0:
        raise ValueError("bucket duration must be positive")
    rows = list(tweet_topics)
    if not rows:
        return [TrendSeries(tuple(pair), []) for pair in pairs]
    by_bucket: dict[datetime, list[tuple[str, set]]] = {}
    times = []
    for tweet_id, topics, created_at in rows:
        times.append(created_at)
        by_bucket.setdefault(bucket_floor(created_at, bucket_seconds), []).append(
            (tweet_id, set(topics))
        )
    starts = bucket_starts(min(times), max(times), bucket_seconds)
    matrices = {start: build_cooccurrence(by_bucket.get(start, [])) for start in starts}
    out = []
    for a, b in pairs:
        points = [(start, pair_weight(matrices[start], a, b)) for start in starts]
        out.append(TrendSeries((a, b), points))
    return out
