"""Exception types raised across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input (bad index, size mismatch, syntax)."""


class DomainError(ValueError):
    """Well-formed input that violates a mathematical precondition."""


class ParseError(InputError):
    """Syntax error in one of the text formats, tagged with a line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class SearchBudgetExceeded(RuntimeError):
    """The automorphism search expanded more nodes than allowed."""
