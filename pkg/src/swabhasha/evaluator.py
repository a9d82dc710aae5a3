"""Accuracy evaluation over gold cases: top-1 (word level) and top-k (suggestion level)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .coder import CodeTable, TextSource, _read_lines, tokenize
from .errors import (
    EmptyGoldSetError,
    MalformedLineError,
    SwabhashaError,
    UnknownScenarioLabelError,
)
from .expander import RuleSet
from .lexicon import Lexicon, _is_sinhala
from .pipeline import transliterate

SCENARIO_LABELS = ("no_vowel", "with_vowel", "reduced_vowel")


@dataclass(frozen=True)
class GoldCase:
    input: str
    expected: str
    scenario_label: str


@dataclass(frozen=True)
class ScenarioStats:
    cases: int
    top1_hits: int
    topk_hits: int


@dataclass(frozen=True)
class Metrics:
    word_level_acc: float
    suggestion_level_acc: float
    per_scenario: Mapping[str, ScenarioStats]
    k: int
    cases: int
    errors: tuple[str, ...]


def load_gold(source: TextSource) -> list[GoldCase]:
    """Load gold cases: `input<TAB>expected<TAB>scenario_label` per line.

    Lines starting with '#' and blank lines are skipped. Inputs must tokenize
    cleanly and expected words must be Sinhala script.
    """
    cases: list[GoldCase] = []
    for lineno, raw in enumerate(_read_lines(source), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedLineError(lineno, f"expected 3 tab-separated fields, got {len(fields)}")
        word, expected, label = fields
        try:
            tokenize(word)
        except SwabhashaError as exc:
            raise MalformedLineError(lineno, f"input {word!r} does not tokenize: {exc}") from None
        if not expected or not _is_sinhala(expected):
            raise MalformedLineError(lineno, f"expected word {expected!r} is not Sinhala script")
        if label not in SCENARIO_LABELS:
            raise UnknownScenarioLabelError(lineno, f"unknown scenario label {label!r}")
        cases.append(GoldCase(input=word, expected=expected, scenario_label=label))
    return cases


def evaluate(
    cases: Iterable[GoldCase],
    lex: Lexicon,
    rules: RuleSet,
    table: CodeTable | None = None,
    k: int = 5,
    threshold: int = 60,
) -> Metrics:
    """Run every gold case through the pipeline and aggregate hit counts.

    A word-level hit means the top suggestion is the expected Sinhala word; a
    suggestion-level hit means the expected word appears in the first k
    suggestions. Cases whose input raises count as misses and are reported in
    Metrics.errors, so crashes cannot inflate accuracy. Aggregation is
    order-independent.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    cases = list(cases)
    if not cases:
        raise EmptyGoldSetError("gold set is empty")
    counts: dict[str, list[int]] = {}  # label -> [cases, top1, topk]
    errors: list[str] = []
    for case in cases:
        tally = counts.setdefault(case.scenario_label, [0, 0, 0])
        tally[0] += 1
        try:
            result = transliterate(case.input, lex, rules, table, top_k=k, threshold=threshold)
        except SwabhashaError as exc:
            errors.append(f"{case.input}: {type(exc).__name__}: {exc}")
            continue
        suggestions = result.suggestions[:k]
        if suggestions and suggestions[0].sinhala == case.expected:
            tally[1] += 1
        if any(s.sinhala == case.expected for s in suggestions):
            tally[2] += 1
    total = len(cases)
    top1 = sum(t[1] for t in counts.values())
    topk = sum(t[2] for t in counts.values())
    return Metrics(
        word_level_acc=top1 / total,
        suggestion_level_acc=topk / total,
        per_scenario={
            label: ScenarioStats(cases=t[0], top1_hits=t[1], topk_hits=t[2])
            for label, t in counts.items()
        },
        k=k,
        cases=total,
        errors=tuple(errors),
    )


def report(metrics: Metrics) -> str:
    """Human-readable table plus a machine-readable key=value block."""
    topk_col = f"top{metrics.k}"
    lines = [f"{'scenario':<16}{'cases':>7}{'top1':>7}{topk_col:>7}"]
    for label in SCENARIO_LABELS:
        stats = metrics.per_scenario.get(label)
        if stats is None:
            continue
        lines.append(f"{label:<16}{stats.cases:>7}{stats.top1_hits:>7}{stats.topk_hits:>7}")
    top1 = sum(s.top1_hits for s in metrics.per_scenario.values())
    topk = sum(s.topk_hits for s in metrics.per_scenario.values())
    lines.append(f"{'total':<16}{metrics.cases:>7}{top1:>7}{topk:>7}")
    lines.append("")
    lines.append(f"word_level={metrics.word_level_acc:.3f}")
    lines.append(f"suggestion_level={metrics.suggestion_level_acc:.3f}")
    lines.append(f"k={metrics.k}")
    lines.append(f"cases={metrics.cases}")
    lines.append(f"errors={len(metrics.errors)}")
    for err in metrics.errors:
        lines.append(f"# error: {err}")
    return "\n".join(lines) + "\n"
