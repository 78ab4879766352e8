"""Exception hierarchy; each CLI-facing class carries its process exit code."""


class HeapsizeError(Exception):
    exit_code = 1


class ConfigError(HeapsizeError):
    """Bad manifest, bad flags, or a request the inputs cannot satisfy."""

    exit_code = 2


class IngestError(HeapsizeError):
    """Corpus files missing, unmatched or undecodable."""

    exit_code = 3


class NoQualifyingPointError(HeapsizeError):
    """No grid point meets the TTR-change threshold; raise the grid end."""

    exit_code = 4


class FitError(HeapsizeError):
    """Growth data unusable for a log-log fit."""

    exit_code = 5


class InsufficientTokensError(ConfigError):
    def __init__(self, available, requested, corpus_id=""):
        where = f" in {corpus_id!r}" if corpus_id else ""
        super().__init__(
            f"insufficient tokens{where}: {available} available, {requested} requested"
        )
        self.available = available
        self.requested = requested
        self.corpus_id = corpus_id
