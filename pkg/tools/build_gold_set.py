#!/usr/bin/env python3
"""Regenerate src/swabhasha/data/gold.tsv and report per-case hit status.

The gold set mixes three scenario labels:

  no_vowel      consonant skeletons (vowels stripped from a romanization)
  with_vowel    full canonical romanizations
  reduced_vowel romanizations with some, but not all, vowels dropped

Expected words are ground truth by construction: every input is derived from
the romanization of the lexicon entry it names. The engine run at the end is
a verification pass, not the source of the expectations.

Run from the repository root:

    python3 tools/build_gold_set.py
"""

from __future__ import annotations

import sys

from swabhasha.coder import CodeTable
from swabhasha.data import bundled_path
from swabhasha.evaluator import GoldCase, evaluate
from swabhasha.expander import default_rules
from swabhasha.lexicon import load_lexicon
from swabhasha.pipeline import transliterate

# (input, expected sinhala, label). Inputs under no_vowel are the consonant
# skeletons of the named word's romanization; reduced_vowel inputs drop one
# or two vowels of it.
NO_VOWEL = [
    ("khmd", "කොහොමද"),
    ("kynn", "කියන්න"),
    ("bh", "බහාව"),
    ("ththth", "තාත්තා"),
    ("ps", "පසු"),
    ("kl", "කළු"),
    ("dws", "දවස"),
    ("mkd", "මොකද"),
    ("hryt", "හරියට"),
    ("ndgnn", "නිදාගන්න"),
    ("ndhs", "නිදහස"),
    ("thbnw", "තිබෙනවා"),
    ("gdr", "ගෙදර"),
    ("nnw", "ඉන්නවා"),
    ("krnn", "කරන්න"),
    ("blnn", "බලන්න"),
    ("gnnw", "ගන්නවා"),
    ("dnnw", "දන්නවා"),
    ("hthnw", "හිතනවා"),
    ("plwn", "පුළුවන්"),
    ("wthrk", "විතරක්"),
    ("mchn", "මචං"),
    ("sll", "සල්ලි"),
    ("wtr", "වතුර"),
    ("lssn", "ලස්සන"),
    ("snhl", "සිංහල"),
    ("smwnn", "සමාවෙන්න"),
    ("mhns", "මහන්සි"),
    ("pnwdy", "පණිවිඩය"),
    ("kthw", "කතාව"),
    # genuinely ambiguous: "mm" is also the skeleton of mama (මම / මාමා)
    ("mm", "අම්මා"),
]

WITH_VOWEL = [
    ("kiyanna", "කියන්න"),
    ("kianna", "කියන්න"),
    ("innawa", "ඉන්නවා"),
    ("kohomada", "කොහොමද"),
    ("karanne", "කරන්නේ"),
    ("amma", "අම්මා"),
    ("ethakota", "එතකොට"),
    ("neda", "නේද"),
    ("wahanse", "වහන්සේ"),
    ("dunna", "දුන්නා"),
    ("epa", "එපා"),
    ("baha", "බහාව"),
    ("thaththa", "තාත්තා"),
    ("pasu", "පසු"),
    ("kalu", "කළු"),
    ("dawasa", "දවස"),
    ("mokada", "මොකද"),
    ("hariyata", "හරියට"),
    ("nidaganna", "නිදාගන්න"),
    ("nidahasa", "නිදහස"),
    ("thibenawa", "තිබෙනවා"),
    ("gedara", "ගෙදර"),
    ("machan", "මචං"),
    ("ayubowan", "ආයුබෝවන්"),
]

REDUCED_VOWEL = [
    ("kynna", "කියන්න"),
    ("kiynna", "කියන්න"),
    ("kohomda", "කොහොමද"),
    ("khomada", "කොහොමද"),
    ("innwa", "ඉන්නවා"),
    ("thibenwa", "තිබෙනවා"),
    ("hariyta", "හරියට"),
    ("nidganna", "නිදාගන්න"),
    ("gedra", "ගෙදර"),
    ("ethakta", "එතකොට"),
    ("welwa", "වෙලාව"),
    ("pulwan", "පුළුවන්"),
    ("balnna", "බලන්න"),
    ("karanwa", "කරනවා"),
    ("hithanwa", "හිතනවා"),
    ("dannwa", "දන්නවා"),
    ("kawadda", "කවදද"),
    ("slli", "සල්ලි"),
    ("mchan", "මචං"),
    ("amm", "අම්මා"),
    ("thathth", "තාත්තා"),
    ("wahnse", "වහන්සේ"),
    ("ayubwan", "ආයුබෝවන්"),
    ("sathya", "සතිය"),
    ("kamrya", "කාමරය"),
    ("iskle", "ඉස්කෝලේ"),
]


def main() -> int:
    table = CodeTable.default()
    lexicon = load_lexicon(bundled_path("lexicon.tsv"), table)
    rules = default_rules()

    labeled = (
        [(w, e, "no_vowel") for w, e in NO_VOWEL]
        + [(w, e, "with_vowel") for w, e in WITH_VOWEL]
        + [(w, e, "reduced_vowel") for w, e in REDUCED_VOWEL]
    )

    sinhala_words = {e.sinhala for e in lexicon.entries}
    missing = [exp for _, exp, _ in labeled if exp not in sinhala_words]
    if missing:
        print(f"expected words not in lexicon: {missing}")
        return 1

    print(f"{'input':<12}{'label':<15}{'rank':>5}  outcome")
    misses = 0
    for word, expected, label in labeled:
        result = transliterate(word, lexicon, rules, table, top_k=5, threshold=60)
        pos = next(
            (i for i, s in enumerate(result.suggestions) if s.sinhala == expected), None
        )
        if pos is None:
            misses += 1
            got = [s.sinhala for s in result.suggestions]
            print(f"{word:<12}{label:<15}{'-':>5}  MISS (got {got})")
        elif pos > 0:
            print(f"{word:<12}{label:<15}{pos + 1:>5}  top-5 hit, not top-1")

    cases = [GoldCase(w, e, label) for w, e, label in labeled]
    metrics = evaluate(cases, lexicon, rules, table, k=5)
    print()
    print(f"cases={metrics.cases} word_level={metrics.word_level_acc:.3f} "
          f"suggestion_level={metrics.suggestion_level_acc:.3f}")
    for label, stats in metrics.per_scenario.items():
        print(f"  {label}: cases={stats.cases} top1={stats.top1_hits} top5={stats.topk_hits}")

    out = bundled_path("gold.tsv")
    lines = [
        "# Gold transliteration cases.",
        "# Format: input<TAB>expected<TAB>scenario_label",
        "# Generated by tools/build_gold_set.py; inputs derive from bundled lexicon romanizations.",
    ]
    lines += [f"{w}\t{e}\t{label}" for w, e, label in labeled]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"\nwrote {len(cases)} cases to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
