"""Exception hierarchy shared by every module of the package."""


class OsculateError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(OsculateError, ValueError):
    """An operation was called with arguments outside its contract."""


class ResourceError(OsculateError):
    """A configured size guard was exceeded."""


class GenericityFailure(OsculateError):
    """No sampled point satisfied the genericity predicate."""


class ValidationError(OsculateError, ValueError):
    """A parametrization failed load-time validation."""


class ParseError(OsculateError, ValueError):
    """Syntax error in variety text, with 1-based line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
