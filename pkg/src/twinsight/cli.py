"""Command-line entry points: ingest, analyze, eval, correlate, serve.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import api, bundled, correlation, evalharness, pipeline, topics
from .corpus import DocumentStore, TweetFilter, load_category_config, ingest_jsonl, query_tweets
from .errors import TwinsightError

USAGE_EXIT = 1
DATA_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we use 1
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--store", default="store", help="document store directory")
    common.add_argument("--artifacts", default=None, help="analysis artifacts directory")

    parser = _Parser(prog="twinsight", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", parents=[common], help="ingest a JSONL tweet file")
    p_ingest.add_argument("--input", required=True, help="JSONL file of tweet records")
    p_ingest.add_argument(
        "--config",
        default=None,
        help="category config JSON (default: bundled five-category config)",
    )

    p_analyze = sub.add_parser("analyze", parents=[common], help="run all analyses, write artifacts")
    p_analyze.add_argument(
        "--extractor", choices=sorted(topics.EXTRACTOR_IDS), default=topics.RAKE
    )
    p_analyze.add_argument("--config", default=None, help="category config JSON")
    p_analyze.add_argument("--bucket", default=None, help="bucket duration (seconds or hour/day/week)")
    p_analyze.add_argument("--neutral-band", type=float, default=None)

    p_eval = sub.add_parser("eval", parents=[common], help="run the evaluation protocols")
    p_eval.add_argument("--gold", required=True, help="gold JSONL fixture")
    p_eval.add_argument("--votes", default=None, help="vote JSONL fixture")
    p_eval.add_argument("--out", default=None, help="write the report here instead of stdout")

    p_corr = sub.add_parser("correlate", parents=[common], help="query correlated topics")
    p_corr.add_argument("--topic", default=None, help="query topic (omit for global pairs)")
    p_corr.add_argument("--category", default=None, help="restrict to one category's tweets")
    p_corr.add_argument("--top", type=int, default=10)

    p_query = sub.add_parser("query", parents=[common], help="list stored tweets")
    p_query.add_argument("--category", default=None)
    p_query.add_argument("--from", dest="time_from", default=None)
    p_query.add_argument("--to", dest="time_to", default=None)
    p_query.add_argument("--location", default=None)
    p_query.add_argument("--topic", default=None)

    p_serve = sub.add_parser("serve", parents=[common], help="serve the read-only HTTP API")
    p_serve.add_argument("--port", type=int, default=8765)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static-dir", default=None, help="directory of dashboard assets")

    return parser


def _config_from_args(args) -> pipeline.PipelineConfig:
    overrides = {}
    if getattr(args, "config", None):
        overrides["category_config"] = Path(args.config)
    if getattr(args, "extractor", None):
        overrides["extractor"] = args.extractor
    if getattr(args, "bucket", None):
        from .timeutil import parse_bucket

        overrides["bucket_seconds"] = parse_bucket(args.bucket)
    if getattr(args, "neutral_band", None) is not None:
        overrides["neutral_band"] = args.neutral_band
    store_dir = Path(args.store)
    artifacts_dir = Path(args.artifacts) if args.artifacts else store_dir.parent / (
        store_dir.name + "-artifacts"
    )
    return pipeline.PipelineConfig.default(
        store_dir=store_dir, artifacts_dir=artifacts_dir, **overrides
    )


def _cmd_ingest(args) -> int:
    config_path = Path(args.config) if args.config else bundled.data_path(bundled.CATEGORY_CONFIG)
    config = load_category_config(config_path)
    store = DocumentStore(args.store)
    report = ingest_jsonl(args.input, config, store)
    print(json.dumps(report.to_dict(), indent=2))
    return 0


def _cmd_analyze(args) -> int:
    config = _config_from_args(args)
    store = DocumentStore(config.store_dir)
    artifacts = pipeline.run_analyze(config, store)
    if artifacts.manifest.get("up_to_date"):
        print("up to date")
    else:
        print(
            json.dumps(
                {
                    "artifacts": str(artifacts.directory),
                    "tweets": artifacts.manifest["tweet_count"],
                    "extractor": artifacts.manifest["extractor"],
                    "categories": artifacts.topic_index.categories(),
                },
                indent=2,
            )
        )
    return 0


def _cmd_eval(args) -> int:
    config = _config_from_args(args)
    resources = pipeline.Resources.load(config)
    gold = evalharness.load_gold(args.gold)
    votes = evalharness.load_votes(args.votes) if args.votes else None
    fixtures = [Path(args.gold).name] + ([Path(args.votes).name] if args.votes else [])
    report = evalharness.eval_report(
        gold,
        votes,
        lambda text: resources.analyze_text(text).label,
        fixtures=fixtures,
    )
    text = report.to_json()
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def _cmd_correlate(args) -> int:
    config = _config_from_args(args)
    artifacts = pipeline.load_artifacts(config.artifacts_dir)
    matrix = artifacts.matrix
    if args.category:
        matrix = artifacts.category_matrices.get(args.category)
        if matrix is None:
            raise TwinsightError(
                f"no matrix for category {args.category!r}; known: "
                + ", ".join(sorted(artifacts.category_matrices))
            )
    if args.topic:
        ranked = correlation.weighted_correlates(matrix, args.topic, args.top)
    else:
        ranked = correlation.top_pairs(matrix, args.top)
    print(json.dumps([wc.to_dict() for wc in ranked], indent=2))
    return 0


def _cmd_query(args) -> int:
    config = _config_from_args(args)
    store = DocumentStore(config.store_dir)
    from .timeutil import parse_utc

    flt = TweetFilter(
        category=args.category,
        time_from=parse_utc(args.time_from) if args.time_from else None,
        time_to=parse_utc(args.time_to) if args.time_to else None,
        location=args.location,
        topic=args.topic,
    )
    topic_lookup = None
    if args.topic:
        artifacts = pipeline.load_artifacts(config.artifacts_dir)
        topic_lookup = artifacts.topic_index.tweet_ids_for
    tweets = query_tweets(flt, store, topic_lookup=topic_lookup)
    print(json.dumps([t.to_record() for t in tweets], indent=2))
    return 0


def _cmd_serve(args) -> int:
    config = _config_from_args(args)
    store = DocumentStore(config.store_dir)
    artifacts = pipeline.load_artifacts(config.artifacts_dir)
    static = args.static_dir
    if static is None:
        default_static = Path("frontend") / "dist"
        static = default_static if default_static.is_dir() else None
    try:
        server = api.serve(
            config, artifacts, args.port, store=store, static_dir=static, host=args.host
        )
    except OSError as exc:
        raise TwinsightError(f"cannot bind {args.host}:{args.port}: {exc}") from exc
    print(f"serving on http://{args.host}:{server.server_port}/ (ctrl-c to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "analyze": _cmd_analyze,
    "eval": _cmd_eval,
    "correlate": _cmd_correlate,
    "query": _cmd_query,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except TwinsightError as exc:
        print(f"twinsight: error: {exc}", file=sys.stderr)
        return DATA_EXIT
    except ValueError as exc:
        print(f"twinsight: error: {exc}", file=sys.stderr)
        return DATA_EXIT


if __name__ == "__main__":
    sys.exit(main())
