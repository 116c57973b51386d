"""Exception hierarchy shared by every argkit module."""


class ArgkitError(Exception):
    """Base class for all errors raised by argkit."""


class UsageError(ArgkitError, ValueError):
    """Bad input: unknown argument, foreign set, violated precondition."""


class ParseError(UsageError):
    """Malformed input file. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapacityError(ArgkitError):
    """A brute-force bound was exceeded; the operation refused to run.

    ``best`` optionally carries partial information, e.g. the best upper
    bound found by a distance search before it gave up.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
