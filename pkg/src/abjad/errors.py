"""Exception hierarchy shared by every abjad module."""

from __future__ import annotations


class AbjadError(ValueError):
    """Base class for all errors raised by this package."""


class UnknownLetter(AbjadError):
    def __init__(self, char: str, script: object = None) -> None:
        self.char = char
        self.script = script
        where = f" in {script} table" if script is not None else ""
        super().__init__(f"no Abjadi value for {char!r} (U+{ord(char):04X}){where}"
                         if len(char) == 1 else f"no Abjadi value for {char!r}{where}")


class NonCanonical(AbjadError):
    """A class word that does not follow the ascending one-letter-per-place form."""


class OutOfRange(AbjadError):
    pass


class UnrepresentableClass(OutOfRange):
    """A three-digit class cannot be written with the script's letters."""


class ParseError(AbjadError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateClass(ParseError):
    pass


class NotADigit(AbjadError):
    pass


class EmptyInput(AbjadError):
    pass
