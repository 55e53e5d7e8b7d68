"""Exception taxonomy shared across the package.

Every error carries a short machine-readable ``category`` that the CLI
prefixes to its one-line diagnostics.
"""


class SicastError(Exception):
    category = "error"


class ProjectionDomainError(SicastError):
    category = "projection-domain"


class ConfigError(SicastError):
    category = "config"


class FormatError(SicastError):
    category = "format"


class ShapeError(SicastError):
    category = "shape"


class GapError(SicastError):
    category = "gap"

    def __init__(self, missing_dates):
        self.missing_dates = sorted(missing_dates)
        super().__init__(
            "missing catalog dates: " + ", ".join(d.isoformat() for d in self.missing_dates)
        )


class MissingChannelError(SicastError):
    category = "missing-channel"


class DegenerateChannelError(SicastError):
    category = "degenerate-channel"


class HistoryError(SicastError):
    category = "history"


class StateError(SicastError):
    category = "state"


class IncompleteForecastError(SicastError):
    category = "incomplete-forecast"


class EmptyDomainError(SicastError):
    category = "empty-domain"


class UndefinedRatioError(SicastError):
    category = "undefined-ratio"


class UndefinedCorrelationError(SicastError):
    category = "undefined-correlation"


class DegenerateBatchError(SicastError):
    category = "degenerate-batch"


class DivergedTrainingError(SicastError):
    category = "diverged-training"


class CheckpointMismatchError(SicastError):
    category = "checkpoint-mismatch"


class LeakageError(SicastError):
    category = "leakage"
