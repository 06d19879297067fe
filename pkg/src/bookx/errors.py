"""Exception hierarchy.

Everything a caller can get wrong about the *mathematics* derives from
:class:`DomainError`; malformed input text raises :class:`ParseError`.
"""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class NegativeRadicand(DomainError):
    pass


class NotRepresentable(DomainError):
    """The exact value exists but lies outside both canonical forms."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: str | None = None):
        self.position = position
        self.expected = expected
        super().__init__(message)
