"""Exception types shared across the package."""


class QEnsembleError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(QEnsembleError):
    """Invalid configuration: unknown dataset name, bad config key, etc."""


class DataError(QEnsembleError):
    """Malformed or unusable data (bad CSV row, too few samples, ...)."""


class UsageError(QEnsembleError):
    """API misuse: dimension mismatch, empty index list, exceeded bound."""


class TrainingError(QEnsembleError):
    """Training diverged (non-finite loss). Carries the offending epoch."""

    def __init__(self, message: str, epoch: int | None = None,
                 member: int | None = None):
        super().__init__(message)
        self.epoch = epoch
        self.member = member


class DegenerateEnsembleError(QEnsembleError):
    """All ensemble accuracies are zero; post-selection can never succeed."""
