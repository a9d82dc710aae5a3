#!/usr/bin/env python3
"""Regenerate src/swabhasha/data/rules.txt from the bundled lexicon.

Every lexicon romanization contributes one rule: its consonant count, the
slot position of each vowel (number of consonants before it), and the vowel
pattern itself. Romanizations with two vowels in a row cannot be expressed
as one-vowel-per-slot rules and are skipped; those words stay reachable
through fuzzy matching. On top of the derived rules, a fixed seed of common
colloquial vowel combinations is attached at one slot per consonant so that
skeletons of words outside the lexicon still expand.

Run from the repository root:

    python3 tools/build_default_rules.py
"""

from __future__ import annotations

import sys
from pathlib import Path

from swabhasha.coder import VOWELS, CodeTable
from swabhasha.data import bundled_path
from swabhasha.expander import MAX_SKELETON_LEN, load_rules
from swabhasha.lexicon import load_lexicon

# Frequent two- to four-vowel combinations of colloquial Sinhala, attached
# mechanically with one vowel after each consonant.
SEED_PATTERNS = [
    ("a", "a"),
    ("a", "u"),
    ("a", "a", "a"),
    ("o", "a", "a"),
    ("a", "i", "a", "a"),
    ("i", "a", "a", "a"),
    ("i", "e", "a", "a"),
    ("o", "o", "a", "a"),
]


def rule_for(rom: str) -> tuple[int, tuple[int, ...], tuple[str, ...]] | None:
    """(skeleton_len, slots, pattern) for one romanization, or None if out of shape."""
    slots: list[int] = []
    pattern: list[str] = []
    consonants = 0
    prev_vowel = False
    for ch in rom:
        if ch in VOWELS:
            if prev_vowel:
                return None  # adjacent vowels do not fit one slot each
            slots.append(consonants)
            pattern.append(ch)
            prev_vowel = True
        else:
            consonants += 1
            prev_vowel = False
    if not slots or consonants == 0 or consonants > MAX_SKELETON_LEN:
        return None
    return consonants, tuple(slots), tuple(pattern)


def main() -> int:
    table = CodeTable.default()
    lexicon = load_lexicon(bundled_path("lexicon.tsv"), table)

    rules: set[tuple[int, tuple[int, ...], tuple[str, ...]]] = set()
    skipped: list[str] = []
    for entry in lexicon.entries:
        for rom in entry.romanizations:
            derived = rule_for(rom)
            if derived is None:
                skipped.append(rom)
            else:
                rules.add(derived)
    for pattern in SEED_PATTERNS:
        n = len(pattern)
        rules.add((n, tuple(range(1, n + 1)), tuple(pattern)))

    out_path = bundled_path("rules.txt")
    lines = [
        "# Default vowel expansion rules.",
        "# Format: skeleton_len|slot,slot,...|vowel,vowel,...",
        "# Slot n inserts the vowel after the n-th skeleton code; slot 0 is word-initial.",
        "# Generated by tools/build_default_rules.py from the bundled lexicon.",
    ]
    for skeleton_len, slots, pattern in sorted(rules):
        lines.append(
            f"{skeleton_len}|{','.join(str(s) for s in slots)}|{','.join(pattern)}"
        )
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    loaded = load_rules(out_path)  # sanity: the emitted file must validate
    per_len = {n: sum(1 for r in loaded.rules if r.skeleton_len == n) for n in range(1, 10)}
    print(f"wrote {len(loaded.rules)} rules to {out_path}")
    print(f"rules per skeleton length: {per_len}")
    if skipped:
        print(f"skipped {len(skipped)} romanizations (adjacent vowels or no consonants):")
        print("  " + " ".join(sorted(set(skipped))))
    return 0


if __name__ == "__main__":
    sys.exit(main())
