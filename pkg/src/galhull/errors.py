"""Exception types.

Every domain error carries a short machine-greppable ``code`` such as
``E_NONDIAGONAL_GRAM``; the CLI prints it and exits with status 1.
"""

from __future__ import annotations


class GalHullError(ValueError):
    """A caller supplied something outside an operation's domain."""

    code = "E_DOMAIN"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def __str__(self) -> str:
        return f"{self.code}: {super().__str__()}"


class ParseError(GalHullError):
    code = "E_PARSE"

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConsistencyError(AssertionError):
    """An internal theorem check failed. This is always a bug."""

    code = "E_INTERNAL"
