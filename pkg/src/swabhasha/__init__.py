"""Swa Bhasha: word-level Singlish to Sinhala transliteration.

Maps Romanized input (with vowels, with reduced vowels, or consonant-only)
to ranked native Sinhala word suggestions via numeric letter coding,
rule-based vowel expansion, and fuzzy matching against a codified lexicon.
"""

from .coder import (
    CodeSeq,
    CodeTable,
    Scenario,
    classify,
    decode,
    encode,
    load_code_table,
    merged_value,
    tokenize,
)
from .errors import SwabhashaError
from .evaluator import GoldCase, Metrics, evaluate, load_gold, report
from .expander import ExpansionRule, RuleSet, default_rules, expand, load_rules
from .lexicon import Lexicon, LexiconEntry, dump_lexicon, load_lexicon
from .matcher import Source, Suggestion, rank, similarity
from .pipeline import (
    BatchItem,
    TransliterationResult,
    transliterate,
    transliterate_batch,
)

__version__ = "0.1.0"

__all__ = [
    "BatchItem",
    "CodeSeq",
    "CodeTable",
    "ExpansionRule",
    "GoldCase",
    "Lexicon",
    "LexiconEntry",
    "Metrics",
    "RuleSet",
    "Scenario",
    "Source",
    "Suggestion",
    "SwabhashaError",
    "TransliterationResult",
    "classify",
    "decode",
    "default_rules",
    "dump_lexicon",
    "encode",
    "evaluate",
    "expand",
    "load_code_table",
    "load_gold",
    "load_lexicon",
    "load_rules",
    "merged_value",
    "rank",
    "report",
    "similarity",
    "tokenize",
    "transliterate",
    "transliterate_batch",
]
