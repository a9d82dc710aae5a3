"""Fuzzy matching of code sequences and ranked suggestion generation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .coder import CodeSeq
from .lexicon import Lexicon

DEFAULT_TOP_K = 5
DEFAULT_THRESHOLD = 60


class Source(str, Enum):
    """How a suggestion was matched."""

    EXACT = "exact"        # a probe equals the entry's code sequence
    EXPANDED = "expanded"  # fuzzy match reached via skeleton expansion
    DIRECT = "direct"      # fuzzy match of the query itself


@dataclass(frozen=True)
class Suggestion:
    entry_id: int
    sinhala: str
    romanization: str
    score: int
    source: Source


def _ratio(kept: int, length: int) -> int:
    # round-half-up of 100 * kept / length, in integer arithmetic
    return (200 * kept + length) // (2 * length)


def _distance_within(a: CodeSeq, b: CodeSeq, cap: int) -> Optional[int]:
    """Token-level Levenshtein distance, or None once it provably exceeds cap."""
    la, lb = len(a), len(b)
    if abs(la - lb) > cap:
        return None
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        ai = a[i - 1]
        cur = [i]
        best = i
        for j in range(1, lb + 1):
            cost = prev[j - 1] + (ai != b[j - 1])
            step = min(cost, prev[j] + 1, cur[j - 1] + 1)
            cur.append(step)
            if step < best:
                best = step
        if best > cap:
            return None
        prev = cur
    return prev[lb] if prev[lb] <= cap else None


def similarity(a: CodeSeq, b: CodeSeq) -> int:
    """Similarity 0..100 between two code sequences.

    100 * (1 - distance / max length), rounded half-up, where distance is the
    insert/delete/substitute edit distance over code tokens. 100 iff the
    sequences are equal; symmetric in its arguments.
    """
    a, b = tuple(a), tuple(b)
    if not a or not b:
        raise ValueError("similarity needs non-empty sequences")
    longest = max(len(a), len(b))
    dist = _distance_within(a, b, longest)
    assert dist is not None  # distance never exceeds the longer length
    return _ratio(longest - dist, longest)


def _max_distance_for(floor: int, length: int) -> int:
    # largest d with _ratio(length - d, length) >= floor
    return (length * (201 - 2 * floor)) // 200


def _score_at_least(a: CodeSeq, b: CodeSeq, floor: int) -> Optional[int]:
    """similarity(a, b) if it reaches floor, else None (computed cheaply)."""
    if floor > 100:
        return None
    longest = max(len(a), len(b))
    cap = _max_distance_for(floor, longest) if floor > 0 else longest
    dist = _distance_within(a, b, cap)
    if dist is None:
        return None
    return _ratio(longest - dist, longest)


def rank(
    query: CodeSeq,
    candidates: Iterable[CodeSeq],
    lex: Lexicon,
    top_k: int = DEFAULT_TOP_K,
    threshold: int = DEFAULT_THRESHOLD,
    fuzzy_source: Source = Source.DIRECT,
) -> list[Suggestion]:
    """Score every lexicon entry against the probes and keep the best.

    The probes are the query plus all candidates; an entry's score is the
    maximum similarity any probe achieves against any of its code sequences.
    Entries at or above the threshold come back sorted by score descending,
    then frequency rank ascending, then Sinhala codepoint order, truncated to
    top_k. Exact (score 100) matches are labeled Source.EXACT; other matches
    get fuzzy_source, which the caller picks per scenario route.

    Pure function over immutable inputs; scoring order cannot change the
    result because the sort key is total.
    """
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    if not 0 <= threshold <= 100:
        raise ValueError("threshold must be within 0..100")
    probes: list[CodeSeq] = [tuple(query)]
    probe_set = {probes[0]}
    for cand in candidates:
        t = tuple(cand)
        if t not in probe_set:
            probe_set.add(t)
            probes.append(t)

    scored: list[tuple[int, int, str, int, int]] = []
    for entry in lex.entries:
        best_score = -1
        best_rom = 0
        for rom_idx, seq in enumerate(entry.code_seqs):
            if seq in probe_set:
                best_score, best_rom = 100, rom_idx
                break
            for probe in probes:
                s = _score_at_least(probe, seq, max(threshold, best_score + 1))
                if s is not None and s > best_score:
                    best_score, best_rom = s, rom_idx
                    if best_score == 100:
                        break
            if best_score == 100:
                break
        if best_score >= threshold:
            scored.append((-best_score, entry.freq_rank, entry.sinhala, entry.id, best_rom))

    scored.sort()
    out: list[Suggestion] = []
    for neg_score, _rank, sinhala, entry_id, rom_idx in scored[:top_k]:
        score = -neg_score
        out.append(
            Suggestion(
                entry_id=entry_id,
                sinhala=sinhala,
                romanization=lex.entry(entry_id).romanizations[rom_idx],
                score=score,
                source=Source.EXACT if score == 100 else fuzzy_source,
            )
        )
    return out
