"""Lexicon-based sentiment scoring and per-category label aggregation.

Scoring walks SENTIMENT-normalized tokens, expands acronyms, looks up
word / hashtag-inner-word / emoticon valences, and lets a negator flip
the next sentiment-bearing contribution within a three-token window.
The final score is the plain sum of the evidence scores.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timedelta
from pathlib import Path

from . import textprep
from .bundled import ACRONYMS, EMOTICONS, SENTIMENT_LEXICON, data_path
from .errors import ParseError
from .textprep import EMOTICON, HASHTAG, NEGATORS, WORD, StopwordList, Token, is_negator
from .timeutil import DAY_SECONDS, bucket_floor, iso_utc

POSITIVE = "Positive"
NEUTRAL = "Neutral"
NEGATIVE = "Negative"
LABELS = (POSITIVE, NEUTRAL, NEGATIVE)

DEFAULT_NEUTRAL_BAND = 0.5
NEGATION_WINDOW = 3


@dataclass(frozen=True)
class SentimentLexicon:
    words: dict[str, int]
    provenance: str = "unspecified"

    def __post_init__(self):
        for w, v in self.words.items():
            if w != w.lower():
                raise ParseError(f"lexicon key must be lowercase: {w!r}")
            if not isinstance(v, int) or v == 0 or not -5 <= v <= 5:
                raise ParseError(f"lexicon valence for {w!r} must be a nonzero int in [-5, 5]")

    def get(self, word: str) -> int | None:
        return self.words.get(word)


@dataclass(frozen=True)
class EmoticonLexicon:
    valences: dict[str, int]
    provenance: str = "unspecified"

    def __post_init__(self):
        for s, v in self.valences.items():
            if not isinstance(v, int) or not -3 <= v <= 3:
                raise ParseError(f"emoticon valence for {s!r} must be an int in [-3, 3]")

    def get(self, surface: str) -> int | None:
        v = self.valences.get(surface)
        return v if v else None

    def surfaces(self) -> frozenset[str]:
        return frozenset(self.valences)


@dataclass(frozen=True)
class AcronymMap:
    expansions: dict[str, tuple[str, ...]]

    def __post_init__(self):
        for k, words in self.expansions.items():
            if k != k.lower():
                raise ParseError(f"acronym key must be lowercase: {k!r}")
            if not words or any(w != w.lower() for w in words):
                raise ParseError(f"acronym {k!r} expansion must be lowercase words")

    def get(self, word: str) -> tuple[str, ...] | None:
        return self.expansions.get(word)


@dataclass
class LexiconBundle:
    words: SentimentLexicon
    emoticons: EmoticonLexicon
    acronyms: AcronymMap

    @classmethod
    def bundled(cls) -> "LexiconBundle":
        return cls(
            words=load_word_lexicon(),
            emoticons=load_emoticon_lexicon(),
            acronyms=load_acronyms(),
        )


def _read_tsv(path: Path):
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError("expected two tab-separated fields", location=f"{path.name}:{lineno}")
        yield lineno, parts[0], parts[1]


def load_word_lexicon(path: str | Path | None = None) -> SentimentLexicon:
    path = Path(path) if path is not None else data_path(SENTIMENT_LEXICON)
    words = {}
    for lineno, word, value in _read_tsv(path):
        try:
            words[word] = int(value)
        except ValueError:
            raise ParseError("valence is not an integer", location=f"{path.name}:{lineno}") from None
    return SentimentLexicon(words, provenance=path.name)


def load_emoticon_lexicon(path: str | Path | None = None) -> EmoticonLexicon:
    path = Path(path) if path is not None else data_path(EMOTICONS)
    valences = {}
    for lineno, surface, value in _read_tsv(path):
        try:
            valences[surface] = int(value)
        except ValueError:
            raise ParseError("valence is not an integer", location=f"{path.name}:{lineno}") from None
    return EmoticonLexicon(valences, provenance=path.name)


def load_acronyms(path: str | Path | None = None) -> AcronymMap:
    path = Path(path) if path is not None else data_path(ACRONYMS)
    expansions = {}
    for _lineno, key, expansion in _read_tsv(path):
        expansions[key.lower()] = tuple(expansion.split())
    return AcronymMap(expansions)


@dataclass
class SentimentResult:
    score: float
    label: str
    evidence: list[tuple[str, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "score": self.score,
            "label": self.label,
            "evidence": [list(e) for e in self.evidence],
        }


def label_from_score(score: float, neutral_band: float = DEFAULT_NEUTRAL_BAND) -> str:
    """Positive above the band, Negative below it, Neutral inside (inclusive)."""
    if neutral_band < 0:
        raise ValueError("neutral band must be >= 0")
    if score > neutral_band:
        return POSITIVE
    if score < -neutral_band:
        return NEGATIVE
    return NEUTRAL


@dataclass
class _Unit:
    """One scoring unit after acronym expansion."""

    phrase: str  # what evidence reports
    valence: int | None
    negator: bool


def _units(tokens: list[Token], lexicons: LexiconBundle):
    for tok in tokens:
        if tok.kind == WORD:
            expansion = lexicons.acronyms.get(tok.lower)
            if expansion:
                for word in expansion:
                    yield _Unit(word, lexicons.words.get(word), word in NEGATORS)
                continue
            yield _Unit(tok.lower, lexicons.words.get(tok.lower), is_negator(tok))
        elif tok.kind == HASHTAG:
            yield _Unit(tok.lower, lexicons.words.get(tok.inner), False)
        elif tok.kind == EMOTICON:
            yield _Unit(tok.surface, lexicons.emoticons.get(tok.surface), False)
        else:
            yield _Unit(tok.lower, None, False)


def score_tweet(
    tokens: list[Token],
    lexicons: LexiconBundle,
    neutral_band: float = DEFAULT_NEUTRAL_BAND,
) -> SentimentResult:
    """Score SENTIMENT-normalized tokens into a polarity result.

    Every matched token contributes (phrase, signed valence) evidence; a
    negated match contributes the inverted valence with the negator kept
    in the evidence phrase.
    """
    evidence: list[tuple[str, int]] = []
    pending_negator: str | None = None
    remaining = 0
    for unit in _units(tokens, lexicons):
        if unit.negator:
            pending_negator = unit.phrase  # a fresh negator restarts the window
            remaining = NEGATION_WINDOW
            continue
        if unit.valence is not None:
            if pending_negator is not None:
                evidence.append((f"{pending_negator} {unit.phrase}", -unit.valence))
                pending_negator = None
            else:
                evidence.append((unit.phrase, unit.valence))
        elif pending_negator is not None:
            remaining -= 1
            if remaining <= 0:
                pending_negator = None
    score = float(sum(v for _, v in evidence))
    return SentimentResult(score, label_from_score(score, neutral_band), evidence)


def sentiment_stopwords(stopwords: StopwordList) -> StopwordList:
    """Stopword list for the sentiment chain: negators must survive.

    The bundled stopword list contains "not"/"no"/"never" and the n't
    contractions; dropping them would break negation handling, so the
    sentiment normalization uses this reduced list.
    """
    contracted = {w for w in stopwords.words if w.endswith(("n't", "n’t"))}
    return stopwords.without(NEGATORS | contracted)


def analyze_text(
    text: str,
    lexicons: LexiconBundle,
    stopwords: StopwordList,
    neutral_band: float = DEFAULT_NEUTRAL_BAND,
    emoticons: frozenset[str] | None = None,
) -> SentimentResult:
    """Full chain: tokenize, SENTIMENT-normalize (keeping negators), score."""
    tokens = textprep.tokenize(text, emoticons)
    normalized = textprep.normalize(
        tokens, textprep.NormalizationProfile.SENTIMENT, sentiment_stopwords(stopwords)
    )
    return score_tweet(normalized, lexicons, neutral_band)


@dataclass
class CategoryAggregate:
    category: str
    bucket_start: datetime
    counts: tuple[int, int, int]  # positive, neutral, negative
    percentages: tuple[float, float, float]

    def to_dict(self) -> dict:
        return {
            "category": self.category,
            "bucket_start": iso_utc(self.bucket_start),
            "counts": {
                "positive": self.counts[0],
                "neutral": self.counts[1],
                "negative": self.counts[2],
            },
            "percentages": {
                "positive": self.percentages[0],
                "neutral": self.percentages[1],
                "negative": self.percentages[2],
            },
        }


def _percentages(counts: tuple[int, int, int]) -> tuple[float, float, float]:
    total = sum(counts)
    if total == 0:
        return (0.0, 0.0, 0.0)
    return tuple(round(100.0 * c / total, 1) for c in counts)


def aggregate_category(
    results, bucket: timedelta | int = DAY_SECONDS
) -> list[CategoryAggregate]:
    """Roll (Tweet, SentimentResult) pairs into per-category bucket counts.

    A tweet in k categories is counted in each of the k aggregates.
    Buckets align to multiples of the duration since the epoch, so daily
    buckets start at UTC midnight. Output is sorted and shuffle-proof.
    """
    seconds = int(bucket.total_seconds()) if isinstance(bucket, timedelta) else int(bucket)
    if seconds <= 0:
        raise ValueError("bucket duration must be positive")
    counts: dict[tuple[str, datetime], list[int]] = {}
    for tweet, result in results:
        start = bucket_floor(tweet.created_at, seconds)
        for category in tweet.categories:
            slot = counts.setdefault((category, start), [0, 0, 0])
            slot[LABELS.index(result.label)] += 1
    out = []
    for (category, start), (pos, neu, neg) in sorted(counts.items()):
        triple = (pos, neu, neg)
        out.append(CategoryAggregate(category, start, triple, _percentages(triple)))
    return out


def dump_aggregates(aggregates: list[CategoryAggregate]) -> str:
    return json.dumps([a.to_dict() for a in aggregates], sort_keys=True, indent=2)
