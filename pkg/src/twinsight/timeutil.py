"""UTC timestamp parsing and fixed-duration bucket alignment.

Buckets are aligned to multiples of the bucket duration since the Unix
epoch, so the default one-day bucket starts at UTC midnight.
"""

from datetime import datetime, timedelta, timezone

from .errors import ParseError

DAY_SECONDS = 86400
_EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)

BUCKET_KEYWORDS = {
    "hour": 3600,
    "day": DAY_SECONDS,
    "week": 7 * DAY_SECONDS,
}


def parse_utc(value: str) -> datetime:
    """Parse an ISO-8601 timestamp into an aware UTC datetime.

    Naive timestamps are interpreted as UTC; sub-second precision is
    truncated (the corpus stores second resolution).
    """
    if not isinstance(value, str) or not value.strip():
        raise ParseError(f"bad timestamp {value!r}")
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        dt = datetime.fromisoformat(text)
    except ValueError as exc:
        raise ParseError(f"bad timestamp {value!r}: {exc}") from exc
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc).replace(microsecond=0)


def iso_utc(dt: datetime) -> str:
    """Render an aware datetime as `YYYY-MM-DDTHH:MM:SSZ`."""
    return dt.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def parse_bucket(value) -> int:
    """Turn a bucket value (seconds, or 'hour'/'day'/'week') into seconds."""
    if isinstance(value, timedelta):
        seconds = int(value.total_seconds())
    elif isinstance(value, int):
        seconds = value
    elif isinstance(value, str) and value in BUCKET_KEYWORDS:
        seconds = BUCKET_KEYWORDS[value]
    elif isinstance(value, str) and value.isdigit():
        seconds = int(value)
    else:
        raise ParseError(f"bad bucket duration {value!r}")
    if seconds <= 0:
        raise ParseError(f"bucket duration must be positive, got {seconds}")
    return seconds


def bucket_floor(dt: datetime, bucket_seconds: int) -> datetime:
    """Start of the bucket containing `dt`."""
    offset = int((dt - _EPOCH).total_seconds())
    return _EPOCH + timedelta(seconds=(offset // bucket_seconds) * bucket_seconds)


def bucket_starts(first: datetime, last: datetime, bucket_seconds: int) -> list[datetime]:
    """All bucket starts covering the closed span [first, last]."""
    out = []
    cur = bucket_floor(first, bucket_seconds)
    stop = bucket_floor(last, bucket_seconds)
    step = timedelta(seconds=bucket_seconds)
    while cur <= stop:
        out.append(cur)
        cur += step
    return out
