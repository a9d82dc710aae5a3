"""Exception types raised by the transliteration engine."""


class SwabhashaError(Exception):
    """Base class for all engine errors."""


class EmptyInputError(SwabhashaError):
    """The input word is empty after trimming whitespace."""


class NonAlphabeticError(SwabhashaError):
    """The input contains a character outside a-z after case folding."""

    def __init__(self, char: str, position: int) -> None:
        super().__init__(f"non-alphabetic character {char!r} at position {position}")
        self.char = char
        self.position = position


class UnmappedLetterError(SwabhashaError):
    """A letter has no code in the active code table."""


class UnknownCodeError(SwabhashaError):
    """A numeric code has no letter in the active code table."""


class SkeletonTooLongError(SwabhashaError):
    """Consonant skeleton is longer than the expansion rules support."""


class NotASkeletonError(SwabhashaError):
    """Expansion was asked for a sequence that contains a vowel code."""


class EmptyGoldSetError(SwabhashaError):
    """Evaluation needs at least one gold case."""


class LineError(SwabhashaError):
    """Problem tied to one line of an input file."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class MalformedLineError(LineError):
    """Structurally invalid line in a lexicon, code table, or gold file."""


class InvalidRomanizationError(LineError):
    """Romanization contains characters outside a-z."""


class InvalidSinhalaError(LineError):
    """Entry text contains no Sinhala-script character."""


class DuplicateExactLineError(LineError):
    """The same sinhala + romanization pair appears twice."""


class MalformedRuleError(LineError):
    """Structurally invalid line in an expansion rule file."""


class UnknownScenarioLabelError(LineError):
    """Gold case label is not one of the known scenario labels."""
