"""Letter coding for Romanized Sinhala input.

A word is tokenized into single Roman letters and each letter is mapped to a
small integer code. Vowel codes sit at or below ``vowel_max``, consonant codes
above it, so a sequence whose codes are all above the boundary is a consonant
skeleton ("no vowel" input) and everything else is vowel-bearing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import IO, Iterable, Mapping, Union

from .errors import (
    EmptyInputError,
    MalformedLineError,
    NonAlphabeticError,
    UnknownCodeError,
    UnmappedLetterError,
)

ALPHABET = "abcdefghijklmnopqrstuvwxyz"
VOWELS = frozenset("aeiou")

# One word as an ordered sequence of letter codes. Tuples are hashable, which
# the lexicon index and candidate dedup rely on.
CodeSeq = tuple[int, ...]

TextSource = Union[str, Path, IO[str], IO[bytes]]

# Default letter assignment: vowels 1-5, consonants from 11 up in alphabetical
# order, leaving 6-10 as headroom below the vowel/consonant boundary.
DEFAULT_CODES: Mapping[str, int] = {
    "a": 1, "e": 2, "i": 3, "o": 4, "u": 5,
    "b": 11, "c": 12, "d": 13, "f": 14, "g": 15, "h": 16, "j": 17,
    "k": 18, "l": 19, "m": 20, "n": 21, "p": 22, "q": 23, "r": 24,
    "s": 25, "t": 26, "v": 27, "w": 28, "x": 29, "y": 30, "z": 31,
}


class Scenario(str, Enum):
    """Input word class: pure consonant skeleton or vowel-bearing."""

    NO_VOWEL = "no_vowel"
    WITH_VOWEL = "with_vowel"


@dataclass(frozen=True)
class CodeTable:
    """Bijective letter-to-code map covering exactly the 26 lowercase letters.

    Immutable after construction; every operation in this module is a pure
    function over it, so instances are safe to share across threads.
    """

    entries: Mapping[str, int]
    vowel_max: int = 10

    def __post_init__(self) -> None:
        entries = dict(self.entries)
        object.__setattr__(self, "entries", entries)
        if set(entries) != set(ALPHABET):
            missing = sorted(set(ALPHABET) - set(entries))
            extra = sorted(set(entries) - set(ALPHABET))
            raise ValueError(
                f"code table must cover exactly a-z (missing {missing}, extra {extra})"
            )
        for letter, code in entries.items():
            if not isinstance(code, int) or not 1 <= code <= 99:
                raise ValueError(f"code for {letter!r} must be an integer in 1..99, got {code!r}")
        codes = list(entries.values())
        if len(set(codes)) != len(codes):
            raise ValueError("codes must be distinct (table is a bijection)")
        if not 1 <= self.vowel_max <= 99:
            raise ValueError(f"vowel_max must be in 1..99, got {self.vowel_max}")
        for letter, code in entries.items():
            if letter in VOWELS and code > self.vowel_max:
                raise ValueError(f"vowel {letter!r} has code {code} above vowel_max {self.vowel_max}")
            if letter not in VOWELS and code <= self.vowel_max:
                raise ValueError(f"consonant {letter!r} has code {code} within the vowel range")
        object.__setattr__(self, "_letter_by_code", {c: l for l, c in entries.items()})

    @classmethod
    def default(cls) -> "CodeTable":
        return _DEFAULT_TABLE

    def code(self, letter: str) -> int:
        try:
            return self.entries[letter]
        except KeyError:
            raise UnmappedLetterError(f"letter {letter!r} is not in the code table") from None

    def letter(self, code: int) -> str:
        try:
            return self._letter_by_code[code]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownCodeError(f"code {code} is not assigned in the code table") from None


_DEFAULT_TABLE = CodeTable(DEFAULT_CODES)


def tokenize(word: str) -> list[str]:
    """Split a word into its lowercase letters.

    The word is trimmed and case-folded first. Raises EmptyInputError for
    blank input and NonAlphabeticError (with the offending character and its
    position in the folded word) for anything outside a-z. No digraph
    grouping: every Roman letter is one token.
    """
    folded = word.strip().lower()
    if not folded:
        raise EmptyInputError("input word is empty")
    for i, ch in enumerate(folded):
        if not ("a" <= ch <= "z"):
            raise NonAlphabeticError(ch, i)
    return list(folded)


def encode(letters: Iterable[str], table: CodeTable | None = None) -> CodeSeq:
    """Map letters to their codes, preserving order and length."""
    table = table or _DEFAULT_TABLE
    return tuple(table.code(l) for l in letters)


def decode(seq: Iterable[int], table: CodeTable | None = None) -> str:
    """Exact inverse of encode: map codes back to their letters."""
    table = table or _DEFAULT_TABLE
    return "".join(table.letter(c) for c in seq)


def classify(seq: CodeSeq, table: CodeTable | None = None) -> Scenario:
    """NO_VOWEL iff every code is above the vowel boundary."""
    table = table or _DEFAULT_TABLE
    if not seq:
        raise ValueError("cannot classify an empty code sequence")
    if min(seq) > table.vowel_max:
        return Scenario.NO_VOWEL
    return Scenario.WITH_VOWEL


def merged_value(seq: CodeSeq) -> str:
    """Render a code sequence as one fixed-width string, two digits per code.

    Fixed width keeps the string form equivalent to the token form; naive
    concatenation of variable-width codes would alias ("1"+"12" == "11"+"2").
    """
    return "".join(format(c, "02d") for c in seq)


def _read_lines(source: TextSource) -> list[str]:
    """Read a path or file object as UTF-8 text lines."""
    if hasattr(source, "read"):
        data = source.read()  # type: ignore[union-attr]
        if isinstance(data, bytes):
            data = data.decode("utf-8")
    else:
        data = Path(source).read_text(encoding="utf-8")  # type: ignore[arg-type]
    return data.splitlines()


def load_code_table(source: TextSource, vowel_max: int = 10) -> CodeTable:
    """Load a code table override file: one "letter=code" pair per line.

    Lines starting with '#' and blank lines are ignored. All CodeTable
    invariants are re-validated on the assembled table.
    """
    entries: dict[str, int] = {}
    for lineno, raw in enumerate(_read_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise MalformedLineError(lineno, f"expected letter=code, got {line!r}")
        letter, _, code_text = line.partition("=")
        letter = letter.strip()
        code_text = code_text.strip()
        if len(letter) != 1 or not ("a" <= letter <= "z"):
            raise MalformedLineError(lineno, f"letter must be a single a-z character, got {letter!r}")
        try:
            code = int(code_text)
        except ValueError:
            raise MalformedLineError(lineno, f"code must be an integer, got {code_text!r}") from None
        if letter in entries:
            raise MalformedLineError(lineno, f"letter {letter!r} assigned twice")
        entries[letter] = code
    return CodeTable(entries, vowel_max=vowel_max)
