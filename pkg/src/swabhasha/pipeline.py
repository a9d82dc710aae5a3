"""End-to-end transliteration of one Singlish word.

tokenize -> encode -> classify, then either expand-and-rank (consonant
skeletons) or rank the query directly (vowel-bearing input, including the
reduced-vowel case, which relies on fuzzy matching alone).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from .coder import CodeTable, Scenario, classify, encode, tokenize
from .errors import SwabhashaError
from .expander import RuleSet, expand
from .lexicon import Lexicon
from .matcher import DEFAULT_THRESHOLD, DEFAULT_TOP_K, Source, Suggestion, rank


@dataclass(frozen=True)
class TransliterationResult:
    query: str
    scenario: Scenario
    suggestions: tuple[Suggestion, ...]
    timing_micros: int = field(compare=False)  # diagnostic, excluded from equality


@dataclass(frozen=True)
class BatchItem:
    """Outcome for one word of a batch: a result or a captured error."""

    word: str
    result: TransliterationResult | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.result is not None


def transliterate(
    word: str,
    lex: Lexicon,
    rules: RuleSet,
    table: CodeTable | None = None,
    *,
    top_k: int = DEFAULT_TOP_K,
    threshold: int = DEFAULT_THRESHOLD,
) -> TransliterationResult:
    """Rank Sinhala suggestions for one Singlish word.

    Deterministic for fixed inputs and stateless: repeated calls return the
    same suggestions (timing aside).
    """
    start = time.perf_counter_ns()
    table = table or CodeTable.default()
    seq = encode(tokenize(word), table)
    scenario = classify(seq, table)
    if scenario is Scenario.NO_VOWEL:
        # The raw skeleton stays in as a probe so words missing from the rule
        # file can still surface through fuzzy matching.
        candidates = expand(seq, rules, table)
        suggestions = rank(seq, candidates, lex, top_k, threshold, fuzzy_source=Source.EXPANDED)
    else:
        suggestions = rank(seq, [], lex, top_k, threshold, fuzzy_source=Source.DIRECT)
    elapsed = (time.perf_counter_ns() - start) // 1000
    return TransliterationResult(
        query=word,
        scenario=scenario,
        suggestions=tuple(suggestions),
        timing_micros=elapsed,
    )


def transliterate_batch(
    words: Iterable[str],
    lex: Lexicon,
    rules: RuleSet,
    table: CodeTable | None = None,
    *,
    top_k: int = DEFAULT_TOP_K,
    threshold: int = DEFAULT_THRESHOLD,
) -> list[BatchItem]:
    """Element-wise transliterate; per-word errors are captured, not raised."""
    out: list[BatchItem] = []
    for word in words:
        try:
            result = transliterate(word, lex, rules, table, top_k=top_k, threshold=threshold)
            out.append(BatchItem(word=word, result=result))
        except SwabhashaError as exc:
            out.append(BatchItem(word=word, error=f"{type(exc).__name__}: {exc}"))
    return out
