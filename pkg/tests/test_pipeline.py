import hashlib
import json
from pathlib import Path

import pytest

from conftest import FOUR_TWEET_ROWS
from twinsight import pipeline, sentiment, topics
from twinsight.corpus import DocumentStore, ingest_jsonl
from twinsight.errors import ConfigError, EmptyStoreError, StaleArtifactsError


def dir_digest(directory: Path) -> dict[str, str]:
    return {
        p.name: hashlib.sha256(p.read_bytes()).hexdigest()
        for p in sorted(Path(directory).iterdir())
        if p.is_file()
    }


@pytest.fixture()
def four_tweet_pipeline(tmp_path, category_config, four_tweet_store):
    config = pipeline.PipelineConfig.default(
        store_dir=four_tweet_store.directory, artifacts_dir=tmp_path / "artifacts"
    )
    return config, four_tweet_store


class TestRunAnalyze:
    def test_empty_store_errors(self, tmp_path):
        config = pipeline.PipelineConfig.default(
            store_dir=tmp_path / "s", artifacts_dir=tmp_path / "a"
        )
        with pytest.raises(EmptyStoreError):
            pipeline.run_analyze(config, DocumentStore(config.store_dir))

    def test_artifacts_match_module_fixtures(self, four_tweet_pipeline, resources, lexicons, stopwords):
        config, store = four_tweet_pipeline
        artifacts = pipeline.run_analyze(config, store)

        # sentiment results equal a direct module-level run
        for row in FOUR_TWEET_ROWS:
            direct = sentiment.analyze_text(row["text"], lexicons, stopwords)
            assert artifacts.sentiments[row["id"]].label == direct.label
            assert artifacts.sentiments[row["id"]].score == direct.score

        # aggregate: 2 positive, 1 neutral, 1 negative in the one Food day
        food = [a for a in artifacts.aggregates if a.category == "Food"]
        assert len(food) == 1
        assert food[0].counts == (2, 1, 1)
        assert food[0].percentages == (50.0, 25.0, 25.0)

        # topic index equals a direct build over the same tweets
        direct_index = topics.build_topic_index(store.all_tweets(), config.extractor, resources)
        assert artifacts.topic_index.to_json() == direct_index.to_json()
        assert artifacts.matrix.n == 4

    def test_rerun_is_noop_and_byte_identical(self, four_tweet_pipeline):
        config, store = four_tweet_pipeline
        first = pipeline.run_analyze(config, store)
        digest_before = dir_digest(config.artifacts_dir)
        second = pipeline.run_analyze(config, store)
        assert second.manifest.get("up_to_date") is True
        assert dir_digest(config.artifacts_dir) == digest_before
        assert first.manifest["corpus_hash"] == second.manifest["corpus_hash"]

    def test_config_change_invalidates(self, four_tweet_pipeline):
        config, store = four_tweet_pipeline
        pipeline.run_analyze(config, store)
        changed = pipeline.PipelineConfig.default(
            store_dir=store.directory,
            artifacts_dir=config.artifacts_dir,
            extractor=topics.POS_CHUNK,
        )
        artifacts = pipeline.run_analyze(changed, store)
        assert not artifacts.manifest.get("up_to_date")
        assert artifacts.manifest["extractor"] == "pos_chunk"

    def test_corpus_change_invalidates(self, four_tweet_pipeline, category_config, tmp_path):
        config, store = four_tweet_pipeline
        pipeline.run_analyze(config, store)
        extra = tmp_path / "extra.jsonl"
        extra.write_text(
            json.dumps(
                {"id": "t9", "text": "more vegan pie #vegan", "created_at": "2017-06-02T00:00:00Z"}
            )
            + "\n",
            encoding="utf-8",
        )
        ingest_jsonl(extra, category_config, store)
        artifacts = pipeline.run_analyze(config, store)
        assert not artifacts.manifest.get("up_to_date")
        assert artifacts.manifest["tweet_count"] == 5

    def test_load_round_trip(self, four_tweet_pipeline):
        config, store = four_tweet_pipeline
        built = pipeline.run_analyze(config, store)
        loaded = pipeline.load_artifacts(config.artifacts_dir)
        assert loaded.manifest == built.manifest
        assert loaded.topic_index.to_json() == built.topic_index.to_json()
        assert loaded.matrix.to_json() == built.matrix.to_json()
        assert {k: v.label for k, v in loaded.sentiments.items()} == {
            k: v.label for k, v in built.sentiments.items()
        }
        assert loaded.aggregates == built.aggregates

    def test_missing_artifacts_error(self, tmp_path):
        with pytest.raises(StaleArtifactsError):
            pipeline.load_artifacts(tmp_path / "nope")

    def test_stale_check(self, four_tweet_pipeline, category_config, tmp_path):
        config, store = four_tweet_pipeline
        pipeline.run_analyze(config, store)
        artifacts = pipeline.load_artifacts(config.artifacts_dir)
        pipeline.check_artifacts_current(config, store, artifacts)  # fine
        extra = tmp_path / "extra2.jsonl"
        extra.write_text(
            json.dumps(
                {"id": "t10", "text": "newer #vegan", "created_at": "2017-06-03T00:00:00Z"}
            )
            + "\n",
            encoding="utf-8",
        )
        ingest_jsonl(extra, category_config, store)
        with pytest.raises(StaleArtifactsError):
            pipeline.check_artifacts_current(config, store, artifacts)

    def test_bucket_matrices_cover_buckets(self, demo_pipeline):
        _config, _store, artifacts = demo_pipeline
        assert len(artifacts.bucket_matrices) >= 3
        for key, matrix in artifacts.bucket_matrices.items():
            assert key.endswith("T00:00:00Z")
            assert matrix.n >= 1

    def test_locations_grouped_sorted(self, demo_pipeline):
        _config, _store, artifacts = demo_pipeline
        counts = [entry["count"] for entry in artifacts.locations]
        assert counts == sorted(counts, reverse=True)
        assert all(entry["place"] for entry in artifacts.locations)


class TestConfig:
    def test_missing_path_rejected(self, tmp_path):
        config = pipeline.PipelineConfig.default(store_dir=tmp_path / "s")
        config.stopwords = tmp_path / "missing.txt"
        with pytest.raises(ConfigError):
            config.validate()

    def test_bad_extractor_rejected(self, tmp_path):
        config = pipeline.PipelineConfig.default(store_dir=tmp_path / "s", extractor="nope")
        with pytest.raises(ConfigError):
            config.validate()

    def test_config_hash_sensitive_to_settings(self, tmp_path):
        a = pipeline.PipelineConfig.default(store_dir=tmp_path / "s")
        b = pipeline.PipelineConfig.default(store_dir=tmp_path / "s", top_n=5)
        assert a.config_hash() != b.config_hash()
        assert a.config_hash() == pipeline.PipelineConfig.default(store_dir=tmp_path / "s").config_hash()
