"""Exception types shared across the package."""


class AlbumNetError(Exception):
    """Base class for all albumnet errors."""


class ConfigError(AlbumNetError):
    """Bad configuration: unknown format tag, missing auth token, bad limits."""


class ParseError(AlbumNetError):
    """A malformed input row; carries the line number and offending field."""

    def __init__(self, line_number: int, field: str, message: str):
        self.line_number = line_number
        self.field = field
        super().__init__(f"line {line_number}, field {field!r}: {message}")


class EmptyDatasetError(AlbumNetError):
    """An operation needed records but the dataset has none."""


class EmptyGraphError(AlbumNetError):
    """An operation needed nodes but the graph has none."""


class InsufficientDataError(AlbumNetError):
    """Not enough data points for the requested analysis."""


class UndefinedStatisticError(AlbumNetError):
    """The requested statistic is undefined (zero variance, zero denominator)."""
