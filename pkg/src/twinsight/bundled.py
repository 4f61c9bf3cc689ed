"""Locations of the data files shipped inside the package."""

from importlib import resources
from pathlib import Path


def data_path(name: str) -> Path:
    """Absolute path of a bundled data file."""
    return Path(str(resources.files("twinsight").joinpath("data", name)))


CATEGORY_CONFIG = "categories.json"
STOPWORDS = "stopwords.txt"
SENTIMENT_LEXICON = "sentiment_lexicon.tsv"
EMOTICONS = "emoticons.tsv"
ACRONYMS = "acronyms.tsv"
TAGGER_LEXICON = "tagger_lexicon.tsv"
DEMO_CORPUS = "demo_corpus.jsonl"
GOLD_FIXTURE = "eval_gold_sample.jsonl"
VOTES_FIXTURE = "eval_votes_sample.jsonl"
