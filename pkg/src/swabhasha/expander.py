"""Vowel expansion: turn consonant skeletons into candidate code sequences.

Each rule says: for skeletons of a given length, insert this vowel pattern at
these slot positions. Slot position n means "after the n-th skeleton code";
slot 0 inserts at the start of the word, which vowel-initial words need.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coder import CodeSeq, CodeTable, TextSource, VOWELS, _read_lines
from .errors import MalformedRuleError, NotASkeletonError, SkeletonTooLongError

MAX_SKELETON_LEN = 9
DEFAULT_MAX_CANDIDATES = 512


@dataclass(frozen=True)
class ExpansionRule:
    """Vowel patterns attachable to skeletons of one length at fixed slots."""

    skeleton_len: int
    slots: tuple[int, ...]
    patterns: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if not 1 <= self.skeleton_len <= MAX_SKELETON_LEN:
            raise ValueError(f"skeleton_len must be in 1..{MAX_SKELETON_LEN}, got {self.skeleton_len}")
        if not self.slots:
            raise ValueError("rule needs at least one slot")
        if any(not 0 <= s <= self.skeleton_len for s in self.slots):
            raise ValueError(f"slots must be within 0..{self.skeleton_len}, got {self.slots}")
        if any(b <= a for a, b in zip(self.slots, self.slots[1:])):
            raise ValueError(f"slots must be strictly increasing, got {self.slots}")
        if not self.patterns:
            raise ValueError("rule needs at least one vowel pattern")
        for pattern in self.patterns:
            if len(pattern) != len(self.slots):
                raise ValueError(f"pattern {pattern} does not match {len(self.slots)} slots")
            if any(v not in VOWELS for v in pattern):
                raise ValueError(f"pattern {pattern} contains a non-vowel")


@dataclass(frozen=True)
class RuleSet:
    """Immutable group of expansion rules, retrievable by skeleton length."""

    rules: tuple[ExpansionRule, ...]
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    _by_len: dict[int, tuple[ExpansionRule, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be positive")
        grouped: dict[int, list[ExpansionRule]] = {}
        for rule in self.rules:
            grouped.setdefault(rule.skeleton_len, []).append(rule)
        object.__setattr__(self, "_by_len", {n: tuple(rs) for n, rs in grouped.items()})

    def for_length(self, skeleton_len: int) -> tuple[ExpansionRule, ...]:
        return self._by_len.get(skeleton_len, ())


def load_rules(source: TextSource, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> RuleSet:
    """Load a rule file: one rule per line, `skeleton_len|slot,slot|vowel,vowel`.

    Lines starting with '#' and blank lines are skipped. Each line carries one
    vowel pattern; rule order in the file fixes candidate order.
    """
    rules: list[ExpansionRule] = []
    for lineno, raw in enumerate(_read_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("|")
        if len(fields) != 3:
            raise MalformedRuleError(lineno, f"expected 3 '|'-separated fields, got {len(fields)}")
        len_field, slots_field, pattern_field = fields
        try:
            skeleton_len = int(len_field)
        except ValueError:
            raise MalformedRuleError(lineno, f"skeleton length must be an integer, got {len_field!r}") from None
        try:
            slots = tuple(int(s) for s in slots_field.split(","))
        except ValueError:
            raise MalformedRuleError(lineno, f"slots must be integers, got {slots_field!r}") from None
        pattern = tuple(pattern_field.split(","))
        try:
            rules.append(ExpansionRule(skeleton_len, slots, (pattern,)))
        except ValueError as exc:
            raise MalformedRuleError(lineno, str(exc)) from None
    return RuleSet(tuple(rules), max_candidates=max_candidates)


def default_rules() -> RuleSet:
    """The bundled rule set (see data/rules.txt; regenerate with tools/build_default_rules.py)."""
    from .data import bundled_path

    return load_rules(bundled_path("rules.txt"))


def expand(skeleton: CodeSeq, rules: RuleSet, table: CodeTable | None = None) -> list[CodeSeq]:
    """All candidate sequences for a consonant skeleton, deduplicated.

    Candidates come out in rule order then pattern order and are truncated at
    the rule set's max_candidates. Inserting only vowel codes guarantees that
    stripping vowels from any candidate gives back the skeleton.
    """
    table = table or CodeTable.default()
    skeleton = tuple(skeleton)
    if not skeleton:
        raise ValueError("skeleton must be non-empty")
    if any(c <= table.vowel_max for c in skeleton):
        raise NotASkeletonError(f"sequence {skeleton} contains a vowel code")
    if len(skeleton) > MAX_SKELETON_LEN:
        raise SkeletonTooLongError(
            f"skeleton of length {len(skeleton)} exceeds the rule range (max {MAX_SKELETON_LEN})"
        )
    seen: set[CodeSeq] = set()
    out: list[CodeSeq] = []
    for rule in rules.for_length(len(skeleton)):
        for pattern in rule.patterns:
            candidate = _insert_vowels(skeleton, rule.slots, pattern, table)
            if candidate not in seen:
                seen.add(candidate)
                out.append(candidate)
    return out[: rules.max_candidates]


def _insert_vowels(
    skeleton: CodeSeq, slots: tuple[int, ...], pattern: tuple[str, ...], table: CodeTable
) -> CodeSeq:
    out: list[int] = []
    prev = 0
    for pos, vowel in zip(slots, pattern):
        out.extend(skeleton[prev:pos])
        out.append(table.code(vowel))
        prev = pos
    out.extend(skeleton[prev:])
    return tuple(out)
