"""The codified lexicon: native Sinhala words indexed by coded Romanizations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .coder import CodeSeq, CodeTable, TextSource, _read_lines, encode
from .errors import (
    DuplicateExactLineError,
    InvalidRomanizationError,
    InvalidSinhalaError,
    MalformedLineError,
)

SINHALA_BLOCK = (0x0D80, 0x0DFF)


def _is_sinhala(text: str) -> bool:
    return any(SINHALA_BLOCK[0] <= ord(ch) <= SINHALA_BLOCK[1] for ch in text)


@dataclass(frozen=True)
class LexiconEntry:
    """One Sinhala word with its Romanizations and their code sequences."""

    id: int
    sinhala: str
    romanizations: tuple[str, ...]
    code_seqs: tuple[CodeSeq, ...]
    freq_rank: int


class Lexicon:
    """Immutable collection of entries with an exact code-sequence index.

    Safe for concurrent readers; reload produces a new instance rather than
    mutating this one.
    """

    def __init__(self, entries: Iterable[LexiconEntry]) -> None:
        self.entries: tuple[LexiconEntry, ...] = tuple(entries)
        ids = [e.id for e in self.entries]
        if len(set(ids)) != len(ids):
            raise ValueError("lexicon entry ids must be unique")
        self._by_id = {e.id: e for e in self.entries}
        index: dict[CodeSeq, list[int]] = {}
        for e in self.entries:
            for seq in e.code_seqs:
                index.setdefault(seq, []).append(e.id)
        self._index = index

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self.entries == other.entries

    def entry(self, entry_id: int) -> LexiconEntry:
        return self._by_id[entry_id]

    def lookup_exact(self, seq: CodeSeq) -> list[LexiconEntry]:
        """All entries with a code sequence exactly equal to seq, most frequent first."""
        hits = [self._by_id[i] for i in self._index.get(tuple(seq), [])]
        hits.sort(key=lambda e: (e.freq_rank, e.id))
        return hits

    def all_code_seqs(self) -> Iterator[tuple[CodeSeq, int]]:
        """Every (code sequence, entry id) pair exactly once, in load order."""
        for e in self.entries:
            for seq in e.code_seqs:
                yield seq, e.id


def load_lexicon(source: TextSource, table: CodeTable | None = None) -> Lexicon:
    """Load a tab-separated lexicon file.

    Format, one entry per line::

        sinhala<TAB>romanization[;romanization...]<TAB>freq_rank

    Lines starting with '#' and blank lines are skipped. Entry ids are
    assigned in line order starting at 1.
    """
    table = table or CodeTable.default()
    entries: list[LexiconEntry] = []
    seen_pairs: set[tuple[str, str]] = set()
    next_id = 1
    for lineno, raw in enumerate(_read_lines(source), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedLineError(lineno, f"expected 3 tab-separated fields, got {len(fields)}")
        sinhala, roms_field, rank_field = fields
        if not sinhala or not _is_sinhala(sinhala):
            raise InvalidSinhalaError(lineno, f"no Sinhala-script character in {sinhala!r}")
        roms = roms_field.split(";")
        for rom in roms:
            if not rom or not all("a" <= ch <= "z" for ch in rom):
                raise InvalidRomanizationError(lineno, f"romanization must be lowercase a-z, got {rom!r}")
            pair = (sinhala, rom)
            if pair in seen_pairs:
                raise DuplicateExactLineError(lineno, f"duplicate entry {sinhala!r} / {rom!r}")
            seen_pairs.add(pair)
        try:
            freq_rank = int(rank_field)
        except ValueError:
            raise MalformedLineError(lineno, f"freq_rank must be an integer, got {rank_field!r}") from None
        if freq_rank < 1:
            raise MalformedLineError(lineno, f"freq_rank must be positive, got {freq_rank}")
        entries.append(
            LexiconEntry(
                id=next_id,
                sinhala=sinhala,
                romanizations=tuple(roms),
                code_seqs=tuple(encode(rom, table) for rom in roms),
                freq_rank=freq_rank,
            )
        )
        next_id += 1
    return Lexicon(entries)


def dump_lexicon(lex: Lexicon) -> str:
    """Serialize a lexicon back to its canonical file form (sorted by id)."""
    lines = [
        f"{e.sinhala}\t{';'.join(e.romanizations)}\t{e.freq_rank}"
        for e in sorted(lex.entries, key=lambda e: e.id)
    ]
    return "\n".join(lines) + "\n" if lines else ""
