import json
from datetime import datetime, timezone

import pytest

from twinsight import bundled, pipeline, sentiment, textprep, topics
from twinsight.corpus import DocumentStore, Location, Tweet, load_category_config

# The worked tweet every extractor fixture pins its output against.
EXAMPLE_TWEET = (
    "You are my new fav chef Kevin Belton. Made shrimp boil and it killed. #cook #food"
)


def utc(y, mo, d, h=0, mi=0, s=0):
    return datetime(y, mo, d, h, mi, s, tzinfo=timezone.utc)


@pytest.fixture(scope="session")
def stopwords():
    return textprep.load_stopwords()


@pytest.fixture(scope="session")
def tagger():
    return textprep.load_tagger()


@pytest.fixture(scope="session")
def resources():
    return topics.ExtractorResources.bundled()


@pytest.fixture(scope="session")
def lexicons():
    return sentiment.LexiconBundle.bundled()


@pytest.fixture(scope="session")
def category_config():
    return load_category_config(bundled.data_path(bundled.CATEGORY_CONFIG))


def make_tweet(tweet_id, text, created, categories=(), hashtags=(), place=None):
    location = Location(place=place) if place else None
    return Tweet(
        id=tweet_id,
        text=text,
        created_at=created,
        author="tester",
        hashtags=list(hashtags),
        categories=set(categories),
        location=location,
    )


# Four Food tweets scoring Positive, Positive, Neutral, Negative with the
# bundled lexicon: the drill-down fixture used across pipeline/API tests.
# Every text isolates "vegan pie" between boundaries so all four tweets
# share that extracted topic.
FOUR_TWEET_ROWS = [
    {
        "id": "t1",
        "text": "Love it! Vegan pie, so great :) #vegan",
        "created_at": "2017-06-01T08:00:00Z",
        "user": "alice",
    },
    {
        "id": "t2",
        "text": "Happy with the vegan pie. Fresh and tasty #vegan",
        "created_at": "2017-06-01T10:30:00Z",
        "user": "bob",
    },
    {
        "id": "t3",
        "text": "Eating some vegan pie, review coming later #vegan",
        "created_at": "2017-06-01T12:00:00Z",
        "user": "carol",
    },
    {
        "id": "t4",
        "text": "This vegan pie, awful mess #vegan",
        "created_at": "2017-06-01T15:45:00Z",
        "user": "dave",
    },
]


@pytest.fixture()
def four_tweet_store(tmp_path, category_config):
    from twinsight.corpus import ingest_jsonl

    corpus_file = tmp_path / "four.jsonl"
    corpus_file.write_text(
        "".join(json.dumps(r) + "\n" for r in FOUR_TWEET_ROWS), encoding="utf-8"
    )
    store = DocumentStore(tmp_path / "store")
    report = ingest_jsonl(corpus_file, category_config, store)
    assert report.records_stored == 4
    return store


@pytest.fixture()
def demo_pipeline(tmp_path, category_config):
    """Ingested + analyzed demo corpus in a tmp dir; returns (config, store, artifacts)."""
    from twinsight.corpus import ingest_jsonl

    config = pipeline.PipelineConfig.default(
        store_dir=tmp_path / "store", artifacts_dir=tmp_path / "artifacts"
    )
    store = DocumentStore(config.store_dir)
    ingest_jsonl(bundled.data_path(bundled.DEMO_CORPUS), category_config, store)
    artifacts = pipeline.run_analyze(config, store)
    return config, store, artifacts
