from typing import Iterable


class HzooError(Exception):
    """Base class for every error raised by the toolkit."""


class UsageError(HzooError, ValueError):
    """A precondition of an operation was violated (arity, index, divisor, ...)."""


class FieldMismatchError(UsageError):
    """Rational and Gaussian-rational coefficients were mixed in one operation."""


class ParseError(HzooError):
    """Raised by the polynomial parser.

    Attributes:
        offset: Byte offset in the UTF-8 source where parsing stopped.
        expected: Descriptions of the tokens that would have been accepted there.
    """

    def __init__(self, offset: int, expected: Iterable[str], message: str = ""):
        self.offset = offset
        self.expected = frozenset(expected)
        self.message = message
        wanted = ", ".join(sorted(self.expected)) or "nothing"
        text = f"parse error at byte {offset}: expected {wanted}"
        if message:
            text = f"{text} ({message})"
        super().__init__(text)
