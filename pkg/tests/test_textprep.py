import string

import pytest
from hypothesis import given, strategies as st

from twinsight import textprep
from twinsight.textprep import (
    EMOTICON,
    HASHTAG,
    MENTION,
    NUMBER,
    PUNCT,
    RT_MARKER,
    URL,
    WORD,
    NormalizationProfile,
    StopwordList,
    tokenize,
)


def kinds(tokens):
    return [t.kind for t in tokens]


def surfaces(tokens):
    return [t.surface for t in tokens]


class TestTokenize:
    def test_each_class_has_a_witness(self):
        toks = tokenize("RT @Alex: #food :)")
        assert [(t.kind, t.surface) for t in toks] == [
            (RT_MARKER, "RT"),
            (MENTION, "@Alex"),
            (PUNCT, ":"),
            (HASHTAG, "#food"),
            (EMOTICON, ":)"),
        ]

    def test_url_then_word(self):
        toks = tokenize("https://t.co/x killed")
        assert kinds(toks) == [URL, WORD]
        assert toks[1].surface == "killed"

    def test_empty(self):
        assert tokenize("") == []

    def test_hash_rt_marker(self):
        toks = tokenize("#RT [Homemade] pie")
        assert toks[0].kind == RT_MARKER
        assert toks[0].surface == "#RT"

    def test_rt_only_leading(self):
        toks = tokenize("the RT button")
        assert RT_MARKER not in kinds(toks)

    def test_numbers_and_percent(self):
        toks = tokenize("99% of 1.3 users at 12:30")
        assert ("99", NUMBER) == (toks[0].surface, toks[0].kind)
        assert ("%", PUNCT) == (toks[1].surface, toks[1].kind)
        assert "1.3" in surfaces(toks)
        assert "12:30" in surfaces(toks)

    def test_apostrophe_word_stays_whole(self):
        toks = tokenize("Can't live")
        assert toks[0].surface == "Can't"
        assert toks[0].kind == WORD

    def test_emoticon_not_eaten_from_word(self):
        toks = tokenize(":pizza :p")
        assert [(t.kind, t.surface) for t in toks] == [
            (PUNCT, ":"),
            (WORD, "pizza"),
            (EMOTICON, ":p"),
        ]

    def test_hashtag_mention_surfaces_keep_prefix(self):
        toks = tokenize("@user #Tag")
        assert toks[0].surface.startswith("@")
        assert toks[1].surface.startswith("#")
        assert toks[1].lower == "#tag"
        assert toks[1].inner == "tag"

    def test_spans_partition_non_whitespace(self):
        text = "RT @a: check https://x.io #fun :) 12:30, can't wait!!"
        toks = tokenize(text)
        covered = set()
        for t in toks:
            start, end = t.span
            assert text[start:end] == t.surface
            assert not set(range(start, end)) & covered
            covered |= set(range(start, end))
        non_ws = {i for i, c in enumerate(text) if not c.isspace()}
        assert covered == non_ws

    @given(st.text(alphabet=string.printable, max_size=80))
    def test_partition_property_printable(self, text):
        toks = tokenize(text)
        covered = []
        for t in toks:
            start, end = t.span
            assert text[start:end] == t.surface
            covered.extend(range(start, end))
        assert covered == sorted(covered)  # strictly increasing spans
        assert set(covered) == {i for i, c in enumerate(text) if not c.isspace()}

    def test_pure_function(self):
        text = "RT @a #b :) x"
        assert tokenize(text) == tokenize(text)


SW = StopwordList(frozenset({"you", "are", "the"}), "test")


class TestNormalize:
    def test_sentiment_profile(self):
        toks = tokenize("you are happy :)")
        out = textprep.normalize(toks, NormalizationProfile.SENTIMENT, SW)
        assert [(t.kind, t.surface) for t in out] == [(WORD, "happy"), (EMOTICON, ":)")]

    def test_rake_keeps_stopwords(self):
        toks = tokenize("you are happy")
        out = textprep.normalize(toks, NormalizationProfile.RAKE, SW)
        assert surfaces(out) == ["you", "are", "happy"]

    def test_sentiment_drops_lone_url(self):
        toks = tokenize("https://t.co/abc")
        assert textprep.normalize(toks, NormalizationProfile.SENTIMENT, SW) == []

    def test_rake_drops_mention_url_rt(self):
        toks = tokenize("RT @you https://t.co/x pie")
        out = textprep.normalize(toks, NormalizationProfile.RAKE, SW)
        assert surfaces(out) == ["pie"]

    def test_chunk_marks_pretagged(self):
        toks = tokenize("RT @you https://t.co/x #tag pie")
        out = textprep.normalize(toks, NormalizationProfile.CHUNK, SW)
        assert surfaces(out) == surfaces(toks)
        flags = {t.surface: t.pretagged for t in out}
        assert flags["RT"] and flags["@you"] and flags["#tag"]
        assert not flags["pie"]

    @given(st.text(max_size=60))
    def test_output_is_subsequence(self, text):
        toks = tokenize(text)
        for profile in NormalizationProfile:
            out = textprep.normalize(toks, profile, SW)
            spans = [t.span for t in toks]
            out_spans = [t.span for t in out]
            it = iter(spans)
            assert all(span in it for span in out_spans)  # order-preserving subset


class TestStopwords:
    def test_bundled_list_loads(self, stopwords):
        assert len(stopwords.words) > 400
        for w in ("you", "are", "my", "new", "and", "it", "not"):
            assert w in stopwords
        for w in ("made", "fav", "chef", "killed", "cook", "food"):
            assert w not in stopwords

    def test_without(self, stopwords):
        reduced = stopwords.without({"not", "no", "never"})
        assert "not" not in reduced
        assert "you" in reduced

    def test_empty_list_rejected(self):
        with pytest.raises(Exception):
            StopwordList(frozenset(), "x")


class TestTagger:
    def test_lexicon_entry(self, tagger):
        assert tagger.tag_word("chef", "chef") == "NN"

    def test_capitalized_unknown_is_nnp(self, tagger):
        assert tagger.tag_word("Kevin", "kevin") == "NNP"

    def test_suffix_rules(self, tagger):
        assert tagger.tag_word("killed", "killed") == "VBD"
        assert tagger.tag_word("quickly", "quickly") == "RB"
        assert tagger.tag_word("jogging", "jogging") == "VBG"
        assert tagger.tag_word("tacos", "tacos") == "NNS"

    def test_fallback_nn(self, tagger):
        assert tagger.tag_word("smoothie", "smoothie") == "NN"

    def test_suffix_beats_capitalization(self, tagger):
        assert tagger.tag_word("Jogged", "jogged") == "VBD"


class TestPosTag:
    def test_words_tagged_hashtags_inner(self, tagger):
        toks = tokenize("chef cooks #food #unknowntag")
        out = textprep.pos_tag(toks, tagger)
        by_surface = {t.surface: t.pos for t in out}
        assert by_surface["chef"] == "NN"
        assert by_surface["#food"] == "NN"
        assert by_surface["#unknowntag"] == "NN"

    def test_pretagged_kinds_untouched(self, tagger):
        toks = tokenize("RT @user https://x.io chef")
        out = textprep.pos_tag(toks, tagger)
        for t in out:
            if t.kind in (RT_MARKER, MENTION, URL):
                assert t.pos is None
            if t.kind == WORD:
                assert t.pos

    def test_empty(self, tagger):
        assert textprep.pos_tag([], tagger) == []

    def test_every_word_tagged_never_url_mention_rt(self, tagger):
        toks = tokenize("RT @a https://x.io great vegan tacos :) #yum 42")
        out = textprep.pos_tag(toks, tagger)
        for t in out:
            if t.kind == WORD:
                assert t.pos
            if t.kind in (URL, MENTION, RT_MARKER):
                assert t.pos is None
