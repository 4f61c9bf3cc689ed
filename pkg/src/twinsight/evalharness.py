"""Evaluation protocols: accuracy against human gold labels, and
best-topic vote tallies across extractors.

Gold files are JSONL rows {id, text, evaluated, columns?: {name: label}};
vote files are JSONL rows {id, votes: {extractor: count}}. The bundled
fixtures are small samples of recorded third-party analyzer runs, so
reported figures describe exactly the fixture they were computed over.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyFixtureError, MissingPredictionError, ParseError


@dataclass(frozen=True)
class GoldLabel:
    tweet_id: str
    evaluated: str


@dataclass
class GoldRecord:
    tweet_id: str
    text: str
    evaluated: str
    columns: dict[str, str] = field(default_factory=dict)

    @property
    def gold(self) -> GoldLabel:
        return GoldLabel(self.tweet_id, self.evaluated)


@dataclass
class VoteRecord:
    tweet_id: str
    votes: dict[str, int]


def _read_lines(path: Path) -> list[str]:
    try:
        return path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read fixture file {path}: {exc}") from exc


def load_gold(path: str | Path) -> list[GoldRecord]:
    path = Path(path)
    records = []
    seen = set()
    for lineno, line in enumerate(_read_lines(path), 1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad gold line: {exc.msg}", location=f"{path.name}:{lineno}") from None
        for fld in ("id", "text", "evaluated"):
            if not raw.get(fld):
                raise ParseError(f"gold row missing {fld!r}", location=f"{path.name}:{lineno}")
        if raw["id"] in seen:
            raise ParseError(f"duplicate gold id {raw['id']!r}", location=f"{path.name}:{lineno}")
        seen.add(raw["id"])
        records.append(
            GoldRecord(
                tweet_id=str(raw["id"]),
                text=str(raw["text"]),
                evaluated=str(raw["evaluated"]),
                columns={str(k): str(v) for k, v in raw.get("columns", {}).items()},
            )
        )
    return records


def load_votes(path: str | Path) -> list[VoteRecord]:
    path = Path(path)
    records = []
    for lineno, line in enumerate(_read_lines(path), 1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad vote line: {exc.msg}", location=f"{path.name}:{lineno}") from None
        if not raw.get("id") or not isinstance(raw.get("votes"), dict):
            raise ParseError("vote row needs id and votes", location=f"{path.name}:{lineno}")
        votes = {str(k): int(v) for k, v in raw["votes"].items()}
        if any(v < 0 for v in votes.values()):
            raise ParseError("vote counts must be >= 0", location=f"{path.name}:{lineno}")
        records.append(VoteRecord(str(raw["id"]), votes))
    return records


def accuracy(predictions: dict[str, str], gold: list[GoldLabel]) -> float:
    """Fraction of gold tweets whose prediction matches the evaluated label."""
    if not gold:
        raise EmptyFixtureError("empty gold fixture")
    matches = 0
    for label in gold:
        if label.tweet_id not in predictions:
            raise MissingPredictionError(label.tweet_id)
        if predictions[label.tweet_id] == label.evaluated:
            matches += 1
    return matches / len(gold)


@dataclass
class TallyResult:
    fractions: dict[str, float]
    wins: dict[str, int]
    ties: int
    total: int

    @property
    def tie_fraction(self) -> float:
        return self.ties / self.total if self.total else 0.0


def vote_tally(records: list[VoteRecord]) -> TallyResult:
    """Per-extractor fraction of tweets it won under the strict-maximum rule.

    A tweet with two extractors sharing the top vote count has no winner
    and is counted as a tie.
    """
    if not records:
        raise EmptyFixtureError("no vote records")
    extractors = sorted({e for r in records for e in r.votes})
    wins = {e: 0 for e in extractors}
    ties = 0
    for record in records:
        if sum(record.votes.values()) <= 0:
            raise EmptyFixtureError(f"vote record {record.tweet_id!r} has no votes")
        top = max(record.votes.values())
        leaders = [e for e, v in record.votes.items() if v == top]
        if len(leaders) == 1:
            wins[leaders[0]] += 1
        else:
            ties += 1
    total = len(records)
    fractions = {e: wins[e] / total for e in extractors}
    return TallyResult(fractions=fractions, wins=wins, ties=ties, total=total)


@dataclass
class EvalReport:
    corpus_size: int
    accuracies: dict[str, float]
    vote_fractions: dict[str, float] = field(default_factory=dict)
    vote_ties: int = 0
    fixtures: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "corpus_size": self.corpus_size,
                "accuracies": dict(sorted(self.accuracies.items())),
                "vote_fractions": dict(sorted(self.vote_fractions.items())),
                "vote_ties": self.vote_ties,
                "fixtures": self.fixtures,
            },
            sort_keys=True,
            indent=2,
        )


def eval_report(
    gold: list[GoldRecord],
    votes: list[VoteRecord] | None,
    local_analyzer,
    local_name: str = "local",
    fixtures: list[str] | None = None,
) -> EvalReport:
    """Score the local analyzer and replay any recorded prediction columns.

    `local_analyzer` maps tweet text to a polarity label. Columns present
    in the gold rows (e.g. recorded third-party outputs) are tallied with
    the same accuracy rule.
    """
    if not gold:
        raise EmptyFixtureError("empty gold fixture")
    gold_labels = [g.gold for g in gold]
    accuracies = {
        local_name: accuracy({g.tweet_id: local_analyzer(g.text) for g in gold}, gold_labels)
    }
    column_names = sorted({name for g in gold for name in g.columns})
    for name in column_names:
        predictions = {g.tweet_id: g.columns[name] for g in gold if name in g.columns}
        rows = [g.gold for g in gold if name in g.columns]
        accuracies[name] = accuracy(predictions, rows)
    report = EvalReport(
        corpus_size=len(gold),
        accuracies=accuracies,
        fixtures=fixtures or [],
    )
    if votes:
        tally = vote_tally(votes)
        report.vote_fractions = tally.fractions
        report.vote_ties = tally.ties
    return report
