"""Exception hierarchy. Everything raised on bad data inherits TwinsightError."""


class TwinsightError(Exception):
    """Base for data-level errors; the CLI maps these to exit code 2."""


class ConfigError(TwinsightError):
    """Missing or inconsistent pipeline configuration."""


class ParseError(TwinsightError):
    """A data file could not be parsed.

    `location` carries line/field context when known.
    """

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{message} (at {location})"
        super().__init__(message)


class StoreError(TwinsightError):
    """Document store unusable (unreadable directory, held lock, ...)."""


class UnknownCategoryError(TwinsightError):
    def __init__(self, category, known):
        self.category = category
        self.known = sorted(known)
        super().__init__(
            f"unknown category {category!r}; known categories: {', '.join(self.known) or '(none)'}"
        )


class UnknownTopicError(TwinsightError):
    def __init__(self, topic):
        self.topic = topic
        super().__init__(f"topic {topic!r} not in the co-occurrence vocabulary")


class UnknownExtractorError(TwinsightError):
    def __init__(self, extractor, known):
        self.extractor = extractor
        self.known = sorted(known)
        super().__init__(
            f"unknown extractor {extractor!r}; registered extractors: {', '.join(self.known)}"
        )


class MissingPredictionError(TwinsightError):
    def __init__(self, tweet_id):
        self.tweet_id = tweet_id
        super().__init__(f"no prediction supplied for gold tweet {tweet_id!r}")


class EmptyFixtureError(TwinsightError):
    """Raised for an empty gold fixture or an all-zero vote record."""


class EmptyStoreError(TwinsightError):
    """Analysis requested over a store with no tweets."""


class StaleArtifactsError(TwinsightError):
    """Artifact manifest does not match the current store/config."""
