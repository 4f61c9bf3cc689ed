"""Topic phrase extraction (RAKE and POS chunking) and the per-category index.

RAKE scores a word as deg/freq, where freq counts the word's occurrences
across all candidate phrases and deg adds the word count of every
candidate the word occurs in (once per occurrence); a phrase scores the
sum of its member word scores. Candidates are the maximal token runs
between stopwords and punctuation.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from . import textprep
from .errors import UnknownExtractorError
from .textprep import (
    CHUNK_TAGS,
    HASHTAG,
    NOUN_TAGS,
    PUNCT,
    WORD,
    NormalizationProfile,
    StopwordList,
    Token,
)

RAKE = "rake"
POS_CHUNK = "pos_chunk"
SKYTTLE = "skyttle"  # reserved for a remote-service adapter; not bundled

EXTRACTOR_IDS = (RAKE, POS_CHUNK)


@dataclass(frozen=True)
class ScoredPhrase:
    phrase: str
    score: float
    extractor: str


@dataclass
class ExtractorResources:
    """Everything an extractor chain needs besides the text itself."""

    stopwords: StopwordList
    tagger: object
    emoticons: frozenset[str] | None = None

    @classmethod
    def bundled(cls) -> "ExtractorResources":
        return cls(
            stopwords=textprep.load_stopwords(),
            tagger=textprep.load_tagger(),
            emoticons=textprep.default_emoticons(),
        )


def _ranked(phrases: list[tuple[str, float]], extractor: str) -> list[ScoredPhrase]:
    seen = {}
    for phrase, score in phrases:
        if phrase not in seen:
            seen[phrase] = score
    ordered = sorted(seen.items(), key=lambda kv: (-kv[1], kv[0]))
    return [ScoredPhrase(p, s, extractor) for p, s in ordered]


def rake_extract(tokens: list[Token], stopwords: StopwordList) -> list[ScoredPhrase]:
    """Run RAKE over RAKE-normalized tokens.

    Punctuation and stopwords delimit candidates; every other token
    (hashtags keep their '#') is a candidate member.
    """
    candidates: list[list[str]] = []
    current: list[str] = []
    for tok in tokens:
        if tok.kind == PUNCT or tok.lower in stopwords:
            if current:
                candidates.append(current)
                current = []
        else:
            current.append(tok.lower)
    if current:
        candidates.append(current)

    freq: Counter[str] = Counter()
    deg: Counter[str] = Counter()
    for cand in candidates:
        for word in cand:
            freq[word] += 1
            deg[word] += len(cand)

    scored = [
        (" ".join(cand), sum(deg[w] / freq[w] for w in cand)) for cand in candidates
    ]
    return _ranked(scored, RAKE)


def pos_chunk_extract(tokens: list[Token]) -> list[ScoredPhrase]:
    """Chunk POS-tagged tokens into topic phrases.

    A chunk is a maximal run of adjacent WORD tokens tagged JJ/NN/NNS/NNP;
    runs with no noun tag are dropped. Hashtags additionally contribute
    their inner word as a one-word topic when it tags as a noun. Scores
    are word counts (ordering only; the chunker has no scoring model).
    """
    phrases: list[tuple[str, float]] = []
    run: list[Token] = []

    def flush():
        nonlocal run
        if run and any(t.pos in NOUN_TAGS for t in run):
            phrases.append((" ".join(t.lower for t in run), float(len(run))))
        run = []

    for tok in tokens:
        if tok.kind == WORD and tok.pos in CHUNK_TAGS:
            run.append(tok)
            continue
        flush()
        if tok.kind == HASHTAG and tok.pos in NOUN_TAGS and tok.inner:
            phrases.append((tok.inner, 1.0))
    flush()
    return _ranked(phrases, POS_CHUNK)


def extract_topics(
    text: str, extractor: str, resources: ExtractorResources
) -> list[ScoredPhrase]:
    """Tokenize, normalize, (tag) and extract with the chosen extractor."""
    if extractor not in EXTRACTOR_IDS:
        raise UnknownExtractorError(extractor, EXTRACTOR_IDS)
    tokens = textprep.tokenize(text, resources.emoticons)
    if extractor == RAKE:
        normalized = textprep.normalize(
            tokens, NormalizationProfile.RAKE, resources.stopwords
        )
        return rake_extract(normalized, resources.stopwords)
    normalized = textprep.normalize(
        tokens, NormalizationProfile.CHUNK, resources.stopwords
    )
    tagged = textprep.pos_tag(normalized, resources.tagger)
    return pos_chunk_extract(tagged)


@dataclass
class TopicEntry:
    count: int = 0
    tweet_ids: set[str] = field(default_factory=set)


@dataclass
class TopicIndex:
    """category -> topic phrase -> (frequency, supporting tweet ids)."""

    index: dict[str, dict[str, TopicEntry]] = field(default_factory=dict)

    def add(self, category: str, phrase: str, tweet_id: str):
        entry = self.index.setdefault(category, {}).setdefault(phrase, TopicEntry())
        if tweet_id not in entry.tweet_ids:
            entry.tweet_ids.add(tweet_id)
            entry.count += 1

    def categories(self) -> list[str]:
        return sorted(self.index)

    def topics(self, category: str) -> dict[str, TopicEntry]:
        return self.index.get(category, {})

    def tweet_ids_for(self, phrase: str, category: str | None = None) -> set[str]:
        ids: set[str] = set()
        buckets = [self.index[category]] if category in self.index else (
            [] if category is not None else list(self.index.values())
        )
        for topics in buckets:
            entry = topics.get(phrase)
            if entry:
                ids |= entry.tweet_ids
        return ids

    def to_json(self) -> str:
        obj = {
            cat: {
                phrase: {"count": e.count, "tweet_ids": sorted(e.tweet_ids)}
                for phrase, e in sorted(topics.items())
            }
            for cat, topics in sorted(self.index.items())
        }
        return json.dumps(obj, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "TopicIndex":
        raw = json.loads(text)
        idx = cls()
        for cat, topics in raw.items():
            for phrase, entry in topics.items():
                idx.index.setdefault(cat, {})[phrase] = TopicEntry(
                    count=entry["count"], tweet_ids=set(entry["tweet_ids"])
                )
        return idx

    def dump(self, path: str | Path):
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "TopicIndex":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def build_topic_index(tweets, extractor: str, resources: ExtractorResources) -> TopicIndex:
    """Extract every tweet's topics and index them under each of its categories."""
    index = TopicIndex()
    for tweet in tweets:
        if not tweet.categories:
            continue
        phrases = extract_topics(tweet.text, extractor, resources)
        for category in tweet.categories:
            for sp in phrases:
                index.add(category, sp.phrase, tweet.id)
    return index
