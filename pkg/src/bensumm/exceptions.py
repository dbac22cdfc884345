"""Exception types raised across the bensumm package."""


class BensummError(Exception):
    """Base class for all bensumm errors."""


class EmptyInput(BensummError):
    """Raised when text input contains no usable content."""


class ParseError(BensummError):
    """Raised on malformed input files; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyCorpus(BensummError):
    """Raised when a corpus file yields no samples."""


class EmptyDocument(BensummError):
    """Raised when a document has no sentences to summarize."""


class DimensionMismatch(BensummError):
    """Raised when vector dimensions disagree."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvalidK(BensummError):
    """Raised when a requested cluster count is out of range."""


class NoPath(BensummError):
    """Raised when a word graph has no start-to-end path (internal error)."""


class UnknownSystem(BensummError):
    """Raised when an evaluation run names a system that is not registered."""
