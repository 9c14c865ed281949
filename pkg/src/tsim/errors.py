"""Exception types raised across the package."""


class TsimError(Exception):
    """Base class for all package errors."""


class DatasetError(TsimError, ValueError):
    """Invalid transaction records or dataset construction."""


class NotFoundError(TsimError, KeyError):
    """A transaction id is not present in the dataset."""

    def __str__(self):
        return Exception.__str__(self)


class ParseError(TsimError, ValueError):
    """Malformed input file. Carries the 1-based line number when known."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        super().__init__(message)

    def __str__(self):
        where = []
        if self.path is not None:
            where.append(str(self.path))
        if self.line is not None:
            where.append(f"line {self.line}")
        prefix = ":".join(where)
        msg = super().__str__()
        return f"{prefix}: {msg}" if prefix else msg


class ComputeError(TsimError, ValueError):
    """A computation precondition failed (too few transactions, bad matrix)."""
