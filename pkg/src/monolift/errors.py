"""Exception types shared across the package."""


class MonoliftError(Exception):
    pass


class ParseError(MonoliftError, ValueError):
    """Malformed input text; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1, text=None):
        self.line = line
        self.column = column
        self.text = text
        super().__init__(f"line {line}, column {column}: {message}")


class ResourceLimitError(MonoliftError):
    """A configured size limit was hit; the claim being checked is unverified, not false."""


class PreconditionError(MonoliftError, ValueError):
    pass
