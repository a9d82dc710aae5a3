import io
import random

import pytest

from swabhasha.coder import CodeTable, encode
from swabhasha.lexicon import load_lexicon
from swabhasha.matcher import Source, rank, similarity

TABLE = CodeTable.default()


def reference_distance(a, b):
    """Independent full-matrix edit distance, kept deliberately naive."""
    n, m = len(a), len(b)
    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        d[i][0] = i
    for j in range(m + 1):
        d[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            d[i][j] = min(
                d[i - 1][j] + 1,
                d[i][j - 1] + 1,
                d[i - 1][j - 1] + (a[i - 1] != b[j - 1]),
            )
    return d[n][m]


def reference_similarity(a, b):
    longest = max(len(a), len(b))
    # round half-up, matching the production contract
    return int(100 * (longest - reference_distance(a, b)) / longest + 0.5)


def random_seq(rng, max_len=10):
    return tuple(rng.choice(list(TABLE.entries.values())) for _ in range(rng.randint(1, max_len)))


class TestSimilarity:
    def test_identity(self):
        for word in ("a", "khmd", "kohomada"):
            seq = encode(word, TABLE)
            assert similarity(seq, seq) == 100

    def test_total_substitution_is_zero(self):
        assert similarity((1, 2), (11, 12)) == 0

    def test_kynna_vs_kiyanna_is_71(self):
        # distance 2 (two insertions) over max length 7: round(100 * 5/7) = 71
        a = encode("kynna", TABLE)
        b = encode("kiyanna", TABLE)
        assert reference_distance(a, b) == 2
        assert similarity(a, b) == 71

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            similarity((), (1,))

    def test_symmetry(self):
        rng = random.Random(11)
        for _ in range(300):
            a, b = random_seq(rng), random_seq(rng)
            assert similarity(a, b) == similarity(b, a)

    def test_100_iff_equal(self):
        rng = random.Random(12)
        for _ in range(300):
            a, b = random_seq(rng), random_seq(rng)
            assert (similarity(a, b) == 100) == (a == b)

    def test_matches_reference_oracle(self):
        rng = random.Random(13)
        for _ in range(300):
            a, b = random_seq(rng), random_seq(rng)
            assert similarity(a, b) == reference_similarity(a, b)


class TestRank:
    @pytest.fixture
    def lex(self):
        text = (
            "කියන්න\tkiyanna;kianna\t5\n"
            "කන්න\tkanna\t3\n"
            "දුන්නා\tdunna\t7\n"
            "එන්න\tenna\t2\n"
        )
        return load_lexicon(io.StringIO(text), TABLE)

    def test_exact_match_scores_100_first(self, lex):
        out = rank(encode("kiyanna", TABLE), [], lex)
        assert out[0].sinhala == "කියන්න"
        assert out[0].score == 100
        assert out[0].source is Source.EXACT
        assert out[0].romanization == "kiyanna"

    def test_empty_lexicon(self):
        empty = load_lexicon(io.StringIO(""), TABLE)
        assert rank(encode("kiyanna", TABLE), [], empty) == []

    def test_equal_scores_break_by_frequency(self):
        text = "මාමා\tmama\t7\nමම\tmama\t3\n"
        lex = load_lexicon(io.StringIO(text), TABLE)
        out = rank(encode("mama", TABLE), [], lex, top_k=5, threshold=0)
        assert [s.sinhala for s in out] == ["මම", "මාමා"]
        assert out[0].score == out[1].score == 100

    def test_sinhala_codepoint_breaks_remaining_ties(self):
        text = "බබා\tbaba\t1\nඅබා\taba\t1\n"
        lex = load_lexicon(io.StringIO(text), TABLE)
        out = rank(encode("kaba", TABLE), [], lex, top_k=5, threshold=0)
        assert out[0].score == out[1].score
        assert [s.sinhala for s in out] == ["අබා", "බබා"]

    def test_candidates_raise_entry_scores(self, lex):
        query = encode("knn", TABLE)
        without = rank(query, [], lex, threshold=0)
        with_cand = rank(query, [encode("kanna", TABLE)], lex, threshold=0)
        score = {s.sinhala: s.score for s in with_cand}
        assert score["කන්න"] == 100
        assert {s.sinhala: s.score for s in without}["කන්න"] < 100

    def test_fuzzy_source_label(self, lex):
        out = rank(encode("kynna", TABLE), [], lex, fuzzy_source=Source.DIRECT)
        by_word = {s.sinhala: s for s in out}
        assert by_word["කියන්න"].source is Source.DIRECT
        out = rank(encode("knn", TABLE), [encode("kanna", TABLE)], lex, fuzzy_source=Source.EXPANDED)
        assert all(s.source in (Source.EXACT, Source.EXPANDED) for s in out)

    def test_scores_respect_threshold(self, lex):
        for threshold in (0, 40, 60, 80, 100):
            out = rank(encode("kynna", TABLE), [], lex, threshold=threshold)
            assert all(s.score >= threshold for s in out)

    def test_raising_threshold_never_adds(self, lex):
        query = encode("kynna", TABLE)
        previous = None
        for threshold in (0, 20, 40, 60, 80, 100):
            current = {s.sinhala for s in rank(query, [], lex, top_k=10, threshold=threshold)}
            if previous is not None:
                assert current <= previous
            previous = current

    def test_sorted_by_composite_key(self, lex):
        out = rank(encode("kynna", TABLE), [], lex, top_k=10, threshold=0)
        keys = [(-s.score, lex.entry(s.entry_id).freq_rank, s.sinhala) for s in out]
        assert keys == sorted(keys)

    def test_each_entry_at_most_once(self, lex):
        out = rank(encode("kiyanna", TABLE), [encode("kianna", TABLE)], lex, top_k=10, threshold=0)
        ids = [s.entry_id for s in out]
        assert len(ids) == len(set(ids))

    def test_top_k_truncates(self, lex):
        out = rank(encode("kanna", TABLE), [], lex, top_k=2, threshold=0)
        assert len(out) == 2

    def test_best_romanization_reported(self, lex):
        # kianna is the closer romanization of the kiyanna entry here
        out = rank(encode("kianna", TABLE), [], lex, top_k=1)
        assert out[0].romanization == "kianna"

    def test_invalid_arguments(self, lex):
        with pytest.raises(ValueError):
            rank(encode("ka", TABLE), [], lex, top_k=0)
        with pytest.raises(ValueError):
            rank(encode("ka", TABLE), [], lex, threshold=101)

    def test_scores_are_exact_above_threshold(self, lex):
        # pruned scoring must agree with the plain metric for returned entries
        rng = random.Random(5)
        for _ in range(100):
            query = random_seq(rng, max_len=8)
            cands = [random_seq(rng, max_len=8) for _ in range(3)]
            for s in rank(query, cands, lex, top_k=10, threshold=40):
                entry = lex.entry(s.entry_id)
                expected = max(
                    similarity(probe, seq)
                    for probe in [query] + cands
                    for seq in entry.code_seqs
                )
                assert s.score == expected
