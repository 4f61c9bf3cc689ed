"""Tweet tokenization, per-consumer normalization profiles, and POS tagging.

All functions here are pure: they never mutate their inputs and always
return new token lists, so they are safe to call from any number of
threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path

from .bundled import EMOTICONS, STOPWORDS, TAGGER_LEXICON, data_path
from .errors import ParseError

# Token kinds
WORD = "WORD"
HASHTAG = "HASHTAG"
MENTION = "MENTION"
URL = "URL"
EMOTICON = "EMOTICON"
RT_MARKER = "RT_MARKER"
NUMBER = "NUMBER"
PUNCT = "PUNCT"

NOUN_TAGS = frozenset({"NN", "NNS", "NNP"})
CHUNK_TAGS = frozenset({"JJ", "NN", "NNS", "NNP"})

NEGATORS = frozenset({"not", "no", "never"})


@dataclass(frozen=True)
class Token:
    surface: str
    span: tuple[int, int]
    kind: str
    lower: str
    pos: str | None = None
    pretagged: bool = False

    @property
    def inner(self) -> str:
        """Hashtag body without the '#', lowercased; other kinds unchanged."""
        return self.lower[1:] if self.kind == HASHTAG else self.lower


def is_negator(token: Token) -> bool:
    """Words that invert the following sentiment contribution."""
    if token.kind != WORD:
        return False
    return token.lower in NEGATORS or token.lower.endswith(("n't", "n’t"))


@dataclass(frozen=True)
class StopwordList:
    words: frozenset[str]
    provenance: str = "unspecified"

    def __post_init__(self):
        if not self.words:
            raise ParseError("stopword list is empty")
        bad = [w for w in self.words if w != w.lower()]
        if bad:
            raise ParseError(f"stopword entries must be lowercase: {bad[:3]}")

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def without(self, exclusions) -> "StopwordList":
        """Copy with some words removed (used to keep negators for sentiment)."""
        return StopwordList(self.words - frozenset(exclusions), self.provenance)


class NormalizationProfile(Enum):
    SENTIMENT = "sentiment"
    RAKE = "rake"
    CHUNK = "chunk"


def load_stopwords(path: str | Path | None = None) -> StopwordList:
    """Read a one-word-per-line stopword file; '#' lines are comments."""
    path = Path(path) if path is not None else data_path(STOPWORDS)
    words = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return StopwordList(frozenset(words), provenance=path.name)


def load_emoticons(path: str | Path | None = None) -> frozenset[str]:
    """Surfaces of the bundled emoticon inventory (valences live in sentiment)."""
    path = Path(path) if path is not None else data_path(EMOTICONS)
    surfaces = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        surface = line.split("\t")[0]
        if surface:
            surfaces.add(surface)
    if not surfaces:
        raise ParseError(f"emoticon inventory {path} is empty")
    return frozenset(surfaces)


_URL = r"https?://\S+|www\.\S+"
_MENTION = r"@\w+"
_HASHTAG = r"#\w+"
_NUMBER = r"\d+(?:[.,:]\d+)*"
_WORD = r"[^\W\d]\w*(?:['’]\w+)*"
_PUNCT = r"[^\w\s]"

_pattern_cache: dict[frozenset[str], re.Pattern] = {}


def _compile(emoticons: frozenset[str]) -> re.Pattern:
    pattern = _pattern_cache.get(emoticons)
    if pattern is not None:
        return pattern
    alts = []
    for emo in sorted(emoticons, key=lambda e: (-len(e), e)):
        piece = re.escape(emo)
        if emo[-1].isalnum():
            piece += r"(?!\w)"  # ":p" must not eat into ":pizza"
        alts.append(piece)
    emo_group = "|".join(alts) or r"(?!x)x"  # never matches if inventory empty
    pattern = re.compile(
        f"(?P<URL>{_URL})"
        f"|(?P<EMOTICON>{emo_group})"
        f"|(?P<MENTION>{_MENTION})"
        f"|(?P<HASHTAG>{_HASHTAG})"
        f"|(?P<NUMBER>{_NUMBER})"
        f"|(?P<WORD>{_WORD})"
        f"|(?P<PUNCT>{_PUNCT})"
    )
    _pattern_cache[emoticons] = pattern
    return pattern


_default_emoticons: frozenset[str] | None = None


def default_emoticons() -> frozenset[str]:
    global _default_emoticons
    if _default_emoticons is None:
        _default_emoticons = load_emoticons()
    return _default_emoticons


def tokenize(text: str, emoticons: frozenset[str] | None = None) -> list[Token]:
    """Split raw tweet text into classified tokens.

    Token spans cover every non-whitespace character exactly once, in
    order, so joining surfaces with the skipped whitespace reconstructs
    the input. A leading "RT" word or "#RT" hashtag is reclassified as
    the retweet marker.
    """
    if emoticons is None:
        emoticons = default_emoticons()
    pattern = _compile(emoticons)
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = pattern.match(text, pos)
        if m is None:  # PUNCT matches any non-word char, so this is unreachable
            raise AssertionError(f"untokenizable character at {pos}: {text[pos]!r}")
        kind = m.lastgroup
        surface = m.group()
        tokens.append(Token(surface, (pos, m.end()), kind, surface.lower()))
        pos = m.end()
    if tokens:
        head = tokens[0]
        if (head.kind == WORD and head.lower == "rt") or (
            head.kind == HASHTAG and head.lower == "#rt"
        ):
            tokens[0] = replace(head, kind=RT_MARKER)
    return tokens


_REMOVED_ALWAYS = frozenset({MENTION, URL, RT_MARKER})
_PRETAG_KINDS = frozenset({MENTION, URL, RT_MARKER, HASHTAG})


def normalize(
    tokens: list[Token],
    profile: NormalizationProfile,
    stopwords: StopwordList,
) -> list[Token]:
    """Filter a token sequence for one downstream consumer.

    SENTIMENT drops mentions/URLs/RT markers and stopword words; RAKE
    drops only mentions/URLs/RT markers (RAKE needs stopwords as phrase
    boundaries); CHUNK keeps everything and flags the kinds the POS
    tagger must not touch.
    """
    if profile is NormalizationProfile.CHUNK:
        return [
            replace(t, pretagged=True) if t.kind in _PRETAG_KINDS else t
            for t in tokens
        ]
    out = []
    for t in tokens:
        if t.kind in _REMOVED_ALWAYS:
            continue
        if profile is NormalizationProfile.SENTIMENT and t.kind == WORD and t.lower in stopwords:
            continue
        out.append(t)
    return out


class RuleLexiconTagger:
    """Lexicon lookup with suffix/capitalization fallbacks.

    Any object with `lookup(word) -> tag | None` and
    `tag_word(surface, lower) -> tag` can be plugged in instead.
    """

    def __init__(self, lexicon: dict[str, str], provenance: str = "unspecified"):
        self.lexicon = dict(lexicon)
        self.provenance = provenance

    def lookup(self, word: str) -> str | None:
        return self.lexicon.get(word)

    def tag_word(self, surface: str, lower: str) -> str:
        tag = self.lexicon.get(lower)
        if tag:
            return tag
        if len(lower) >= 4 and lower.endswith("ly"):
            return "RB"
        if len(lower) >= 5 and lower.endswith("ing"):
            return "VBG"
        if len(lower) >= 4 and lower.endswith("ed"):
            return "VBD"
        if len(lower) >= 4 and lower.endswith("s") and not lower.endswith(("ss", "us", "is")):
            return "NNS"
        if surface[:1].isupper():
            return "NNP"
        return "NN"


def load_tagger(path: str | Path | None = None) -> RuleLexiconTagger:
    """Build the bundled tagger from a word<TAB>TAG lexicon file."""
    path = Path(path) if path is not None else data_path(TAGGER_LEXICON)
    lexicon = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError("bad tagger lexicon line", location=f"{path.name}:{lineno}")
        lexicon[parts[0].lower()] = parts[1]
    return RuleLexiconTagger(lexicon, provenance=path.name)


def pos_tag(tokens: list[Token], tagger) -> list[Token]:
    """Attach Penn-Treebank tags to WORD and HASHTAG tokens.

    Hashtags get their inner word's lexicon tag when known, else NN;
    pre-tagged kinds (mentions, URLs, RT markers) are left untouched.
    """
    out = []
    for t in tokens:
        if t.kind == WORD:
            out.append(replace(t, pos=tagger.tag_word(t.surface, t.lower)))
        elif t.kind == HASHTAG:
            out.append(replace(t, pos=tagger.lookup(t.inner) or "NN"))
        else:
            out.append(t)
    return out
