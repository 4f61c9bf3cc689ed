"""Read-only JSON HTTP API over the analysis artifacts.

Responses are computed from immutable, preloaded artifacts with stable
key ordering and no Date/Server headers, so a given route + query
returns byte-identical responses across requests and restarts. Unknown
routes, categories and topics return structured 404 JSON bodies.
"""

from __future__ import annotations

import json
import mimetypes
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, unquote, urlparse

from . import correlation, sentiment
from .corpus import DocumentStore
from .errors import TwinsightError
from .pipeline import AnalysisArtifacts, PipelineConfig, Resources, check_artifacts_current
from .timeutil import bucket_floor, bucket_starts, iso_utc, parse_bucket, parse_utc

JSON_TYPE = "application/json; charset=utf-8"


class ApiError(Exception):
    def __init__(self, status: int, message: str, **details):
        self.status = status
        self.body = {"error": {"status": status, "message": message, **details}}
        super().__init__(message)


def _encode(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=2) + "\n").encode()


class TwinsightApi:
    """Route handlers, kept separate from the HTTP plumbing for testability."""

    def __init__(
        self,
        config: PipelineConfig,
        artifacts: AnalysisArtifacts,
        store: DocumentStore,
        resources: Resources | None = None,
    ):
        self.config = config
        self.artifacts = artifacts
        self.store = store
        self.resources = resources or Resources.load(config)
        self.category_order = self.resources.categories.names()
        self._tweets = {t.id: t for t in store.all_tweets()}

    # ----- route dispatch -----

    def handle(self, path: str, params: dict[str, list[str]]) -> dict | list:
        parts = [unquote(p) for p in path.strip("/").split("/") if p]
        if parts[:1] != ["api"]:
            raise ApiError(404, "unknown route", path=path)
        route = parts[1:]
        if route == ["categories"]:
            return self.categories()
        if len(route) == 3 and route[0] == "categories" and route[2] == "sentiment":
            return self.category_sentiment(route[1], params)
        if len(route) == 3 and route[0] == "categories" and route[2] == "topics":
            return self.category_topics(route[1], params)
        if len(route) == 3 and route[0] == "topics" and route[2] == "tweets":
            return self.topic_tweets(route[1], params)
        if route == ["correlations"]:
            return self.correlations(params)
        if route == ["correlations", "trends"]:
            return self.correlation_trends(params)
        if route == ["hashtags", "trends"]:
            return self.hashtag_trends(params)
        if route == ["locations", "summary"]:
            return self.locations_summary()
        raise ApiError(404, "unknown route", path=path)

    # ----- parameter helpers -----

    @staticmethod
    def _single(params, name) -> str | None:
        values = params.get(name)
        return values[-1] if values else None

    def _bucket(self, params) -> int:
        raw = self._single(params, "bucket")
        if raw is None:
            return self.config.bucket_seconds
        try:
            return parse_bucket(raw)
        except TwinsightError as exc:
            raise ApiError(400, str(exc)) from None

    def _time(self, params, name):
        raw = self._single(params, name)
        if raw is None:
            return None
        try:
            return parse_utc(raw)
        except TwinsightError as exc:
            raise ApiError(400, str(exc)) from None

    def _limit(self, params, name="limit", default=None) -> int:
        raw = self._single(params, name)
        if raw is None:
            return default if default is not None else self.config.top_n
        try:
            value = int(raw)
        except ValueError:
            raise ApiError(400, f"{name} must be an integer") from None
        if value < 1:
            raise ApiError(400, f"{name} must be >= 1")
        return value

    def _check_category(self, category: str):
        if category not in self.category_order:
            raise ApiError(
                404, "unknown category", category=category, known=self.category_order
            )

    # ----- endpoints -----

    def categories(self) -> list[str]:
        return self.category_order

    def category_sentiment(self, category: str, params) -> dict:
        self._check_category(category)
        bucket = self._bucket(params)
        t_from = self._time(params, "from")
        t_to = self._time(params, "to")
        rows = []
        for tweet in self.store.all_tweets():
            if category not in tweet.categories:
                continue
            if t_from and tweet.created_at < t_from:
                continue
            if t_to and tweet.created_at >= t_to:
                continue
            result = self.artifacts.sentiments.get(tweet.id)
            if result:
                rows.append((tweet, result))
        aggregates = sentiment.aggregate_category(rows, bucket)
        buckets = [a.to_dict() for a in aggregates if a.category == category]
        totals = [0, 0, 0]
        for a in aggregates:
            if a.category == category:
                totals = [x + y for x, y in zip(totals, a.counts)]
        total_triple = (totals[0], totals[1], totals[2])
        return {
            "category": category,
            "bucket_seconds": bucket,
            "buckets": buckets,
            "totals": {
                "counts": {
                    "positive": totals[0], "neutral": totals[1], "negative": totals[2],
                },
                "percentages": dict(
                    zip(("positive", "neutral", "negative"), _percent_triple(total_triple))
                ),
            },
        }

    def category_topics(self, category: str, params) -> dict:
        self._check_category(category)
        limit = self._limit(params)
        entries = self.artifacts.topic_index.topics(category)
        ranked = sorted(entries.items(), key=lambda kv: (-kv[1].count, kv[0]))[:limit]
        return {
            "category": category,
            "topics": [{"phrase": p, "count": e.count} for p, e in ranked],
        }

    def topic_tweets(self, phrase: str, params) -> dict:
        category = self._single(params, "category")
        if category is not None:
            self._check_category(category)
        ids = self.artifacts.topic_index.tweet_ids_for(phrase, category)
        if not ids:
            raise ApiError(404, "unknown topic", topic=phrase)
        tweets = sorted(
            (self._tweets[i] for i in ids if i in self._tweets),
            key=lambda t: (t.created_at, t.id),
        )
        return {
            "topic": phrase,
            "tweets": [
                {
                    "id": t.id,
                    "text": t.text,
                    "created_at": iso_utc(t.created_at),
                    "author": t.author,
                    "sentiment": self.artifacts.sentiments[t.id].label
                    if t.id in self.artifacts.sentiments
                    else sentiment.NEUTRAL,
                }
                for t in tweets
            ],
        }

    def correlations(self, params) -> dict:
        top = self._limit(params, "top")
        topic = self._single(params, "topic")
        category = self._single(params, "category")
        matrix = self.artifacts.matrix
        if category is not None:
            self._check_category(category)
            matrix = self.artifacts.category_matrices.get(
                category, correlation.CooccurrenceMatrix()
            )
        if topic is not None:
            if topic not in matrix.df:
                raise ApiError(404, "unknown topic", topic=topic)
            ranked = correlation.weighted_correlates(matrix, topic, top)
        else:
            ranked = correlation.top_pairs(matrix, top)
        return {
            "mode": "topic" if topic is not None else "pairs",
            "topic": topic,
            "category": category,
            "correlations": [wc.to_dict() for wc in ranked],
        }

    def _trend_rows(self):
        for tweet in self.store.all_tweets():
            phrases = self.artifacts.tweet_topics.get(tweet.id, [])
            yield tweet.id, set(phrases), tweet.created_at

    def correlation_trends(self, params) -> dict:
        bucket = self._bucket(params)
        raw_pairs = self._single(params, "pairs")
        if raw_pairs:
            pairs = []
            for chunk in raw_pairs.split(","):
                sides = chunk.split("|")
                if len(sides) != 2 or not sides[0] or not sides[1]:
                    raise ApiError(400, "pairs must look like topicA|topicB,topicC|topicD")
                pairs.append((sides[0], sides[1]))
        else:
            pairs = [wc.pair for wc in correlation.top_pairs(self.artifacts.matrix, self.config.top_n)]
        series = correlation.trend_series(self._trend_rows(), pairs, bucket)
        return {"bucket_seconds": bucket, "series": [s.to_dict() for s in series]}

    def hashtag_trends(self, params) -> dict:
        bucket = self._bucket(params)
        raw_tags = self._single(params, "tags")
        tweets = self.store.all_tweets()
        if raw_tags:
            tags = [t.strip().lstrip("#").lower() for t in raw_tags.split(",") if t.strip()]
        else:
            counts: dict[str, int] = {}
            for t in tweets:
                for tag in set(t.hashtags):
                    counts[tag] = counts.get(tag, 0) + 1
            tags = [t for t, _ in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))]
            tags = tags[: self.config.top_n]
        if not tweets:
            return {"bucket_seconds": bucket, "series": []}
        starts = bucket_starts(
            tweets[0].created_at, tweets[-1].created_at, bucket
        )
        per_tag: dict[str, dict] = {
            tag: {iso_utc(s): 0 for s in starts} for tag in tags
        }
        for t in tweets:
            key = iso_utc(bucket_floor(t.created_at, bucket))
            for tag in set(t.hashtags):
                if tag in per_tag:
                    per_tag[tag][key] += 1
        return {
            "bucket_seconds": bucket,
            "series": [
                {
                    "tag": tag,
                    "points": [
                        {"bucket_start": iso_utc(s), "count": per_tag[tag][iso_utc(s)]}
                        for s in starts
                    ],
                }
                for tag in tags
            ],
        }

    def locations_summary(self) -> dict:
        return {"locations": self.artifacts.locations}


def _percent_triple(counts) -> tuple[float, float, float]:
    total = sum(counts)
    if total == 0:
        return (0.0, 0.0, 0.0)
    return tuple(round(100.0 * c / total, 1) for c in counts)


def make_handler(api: TwinsightApi, static_dir: Path | None):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):  # keep test output quiet
            pass

        def _respond(self, status: int, body: bytes, content_type: str):
            # send_response() would add Date/Server headers; responses must
            # be byte-identical across restarts, so emit headers manually.
            self.send_response_only(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def do_GET(self):
            parsed = urlparse(self.path)
            try:
                if parsed.path == "/api" or parsed.path.startswith("/api/"):
                    payload = api.handle(parsed.path, parse_qs(parsed.query))
                    self._respond(200, _encode(payload), JSON_TYPE)
                    return
                if static_dir is not None:
                    self._serve_static(parsed.path)
                    return
                raise ApiError(404, "unknown route", path=parsed.path)
            except ApiError as exc:
                self._respond(exc.status, _encode(exc.body), JSON_TYPE)
            except Exception as exc:  # pragma: no cover - defensive
                body = {"error": {"status": 500, "message": str(exc)}}
                self._respond(500, _encode(body), JSON_TYPE)

        def _serve_static(self, path: str):
            rel = path.lstrip("/") or "index.html"
            target = (static_dir / rel).resolve()
            if not str(target).startswith(str(static_dir.resolve())) or not target.is_file():
                raise ApiError(404, "not found", path=path)
            content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
            self._respond(200, target.read_bytes(), content_type)

    return Handler


def serve(
    config: PipelineConfig,
    artifacts: AnalysisArtifacts,
    port: int,
    store: DocumentStore | None = None,
    static_dir: str | Path | None = None,
    host: str = "127.0.0.1",
) -> ThreadingHTTPServer:
    """Start the read-only API server; returns the bound server object.

    Validates that the artifacts match the store and configuration before
    serving anything. Call `serve_forever()` on the result (the CLI does),
    or use it on an ephemeral port in tests via `server_port`.
    """
    store = store or DocumentStore(config.store_dir)
    check_artifacts_current(config, store, artifacts)
    api = TwinsightApi(config, artifacts, store)
    static = Path(static_dir) if static_dir else None
    server = ThreadingHTTPServer((host, port), make_handler(api, static))
    server.daemon_threads = True
    return server


def serve_background(server: ThreadingHTTPServer) -> threading.Thread:
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return thread
