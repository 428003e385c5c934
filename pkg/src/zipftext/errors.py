"""Exception hierarchy shared by all analysis modules."""


class ZipfTextError(Exception):
    """Base class for every error raised by zipftext."""


class IngestionError(ZipfTextError):
    """Raw input could not be decoded or read."""


class ConfigError(ZipfTextError):
    """Malformed tokenizer configuration."""


class SplitError(ZipfTextError):
    """Text too short to be divided into halves."""


class EmptyTextError(ZipfTextError):
    """An operation needs at least one token (or sentence)."""


class FitError(ZipfTextError):
    """Invalid input to the log-log least-squares fit."""


class DegenerateFitError(FitError):
    """All abscissae coincide, so the slope is undefined."""


class RangeError(ZipfTextError):
    """The upper rank of the Zipfian range cannot be located."""


class NoZipfianRangeError(ZipfTextError):
    """No lower rank satisfies the fit-quality criteria."""


class UndefinedPeriodError(ZipfTextError):
    """A word that occurs once has no average period."""


class DomainError(ZipfTextError, ValueError):
    """Argument outside the domain of a closed-form model expression."""
