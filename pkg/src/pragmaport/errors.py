"""Exception types and diagnostics shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    """One message tied to a source location (line/column are 1-based, 0 = none)."""

    severity: str
    message: str
    line: int = 0
    column: int = 0

    def format(self, filename: str = "<input>") -> str:
        return f"{filename}:{self.line}:{self.column}: {self.severity}: {self.message}"


class TranspilerError(Exception):
    """Base class for every error raised by this package."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def at(self, line: int, column: int) -> "TranspilerError":
        """Attach a location if none was recorded yet."""
        if not self.line:
            self.line = line
            self.column = column
        return self

    def to_diagnostic(self) -> Diagnostic:
        return Diagnostic("error", self.message, self.line, self.column)


class MalformedRegistry(TranspilerError):
    pass


class DuplicateAlias(MalformedRegistry):
    pass


class DanglingCanonicalId(MalformedRegistry):
    pass


class IncompleteApplicability(MalformedRegistry):
    pass


class UnbalancedParentheses(TranspilerError):
    pass


class ArgsOnNoArgsAlias(TranspilerError):
    pass


class UnknownClause(TranspilerError):
    pass


class ArityMismatch(TranspilerError):
    pass


class MalformedRowFile(TranspilerError):
    pass
