import io
import random

import pytest

from swabhasha.coder import ALPHABET, CodeTable, decode, encode
from swabhasha.data import bundled_path
from swabhasha.errors import (
    DuplicateExactLineError,
    InvalidRomanizationError,
    InvalidSinhalaError,
    MalformedLineError,
)
from swabhasha.lexicon import dump_lexicon, load_lexicon

TABLE = CodeTable.default()


def load_text(text: str):
    return load_lexicon(io.StringIO(text), TABLE)


class TestLoad:
    def test_codifies_kohomada(self):
        lex = load_text("කොහොමද\tkohomada\t12\n")
        assert len(lex) == 1
        entry = lex.entries[0]
        assert entry.code_seqs == ((18, 4, 16, 4, 20, 1, 13, 1),)
        assert entry.freq_rank == 12
        assert entry.id == 1

    def test_empty_file(self):
        assert len(load_text("# header only\n")) == 0

    def test_multiple_romanizations(self):
        lex = load_text("කියන්න\tkiyanna;kianna\t5\n")
        entry = lex.entries[0]
        assert entry.romanizations == ("kiyanna", "kianna")
        assert len(entry.code_seqs) == 2

    def test_ids_follow_line_order(self):
        lex = load_text("අද\tada\t2\n# comment\nහෙට\theta\t1\n")
        assert [e.id for e in lex.entries] == [1, 2]
        assert [e.sinhala for e in lex.entries] == ["අද", "හෙට"]

    def test_wrong_field_count(self):
        with pytest.raises(MalformedLineError) as exc:
            load_text("අද\tada\n")
        assert exc.value.lineno == 1

    def test_bad_romanization(self):
        with pytest.raises(InvalidRomanizationError):
            load_text("අද\tad1\t3\n")

    def test_non_sinhala_entry(self):
        with pytest.raises(InvalidSinhalaError):
            load_text("today\tada\t3\n")

    def test_duplicate_pair(self):
        with pytest.raises(DuplicateExactLineError) as exc:
            load_text("අද\tada\t1\nඅද\tada\t2\n")
        assert exc.value.lineno == 2

    def test_missing_rank_is_error(self):
        with pytest.raises(MalformedLineError):
            load_text("අද\tada\tsoon\n")

    def test_non_positive_rank(self):
        with pytest.raises(MalformedLineError):
            load_text("අද\tada\t0\n")

    def test_reload_determinism(self):
        text = bundled_path("lexicon.tsv").read_text(encoding="utf-8")
        assert load_text(text) == load_text(text)


class TestLookupExact:
    def test_hit(self):
        lex = load_text("කොහොමද\tkohomada\t12\n")
        hits = lex.lookup_exact(encode("kohomada", TABLE))
        assert [e.sinhala for e in hits] == ["කොහොමද"]

    def test_miss(self):
        lex = load_text("කොහොමද\tkohomada\t12\n")
        assert lex.lookup_exact(encode("zzz", TABLE)) == []

    def test_homographs_in_frequency_order(self):
        lex = load_text("මාමා\tmama\t7\nමම\tmama\t3\n")
        hits = lex.lookup_exact(encode("mama", TABLE))
        assert [e.sinhala for e in hits] == ["මම", "මාමා"]


class TestAllCodeSeqs:
    def test_single_romanizations(self):
        lex = load_text("අද\tada\t1\nහෙට\theta\t2\nඊයේ\tiye\t3\n")
        assert len(list(lex.all_code_seqs())) == 3

    def test_multi_romanization_entry(self):
        lex = load_text("කියන්න\tkiyanna;kianna\t5\n")
        pairs = list(lex.all_code_seqs())
        assert len(pairs) == 2
        assert {i for _, i in pairs} == {1}

    def test_pair_count_matches_counting_oracle(self):
        # random fixture; oracle is an independent sum over the source lines
        rng = random.Random(2024)
        lines = []
        expected_pairs = 0
        for n in range(40):
            rom_count = rng.randint(1, 3)
            roms = set()
            while len(roms) < rom_count:
                roms.add("".join(rng.choices(ALPHABET, k=rng.randint(2, 8))))
            expected_pairs += len(roms)
            lines.append(f"කෑ{chr(0x0D9A + n)}\t{';'.join(sorted(roms))}\t{n + 1}")
        lex = load_text("\n".join(lines) + "\n")
        assert len(list(lex.all_code_seqs())) == expected_pairs


class TestBundledLexicon:
    def test_loads(self):
        lex = load_lexicon(bundled_path("lexicon.tsv"), TABLE)
        assert len(lex) >= 190

    def test_codification_consistency(self):
        lex = load_lexicon(bundled_path("lexicon.tsv"), TABLE)
        for entry in lex.entries:
            for rom, seq in zip(entry.romanizations, entry.code_seqs):
                assert decode(seq, TABLE) == rom

    def test_dump_round_trips_bit_exact(self):
        lex = load_lexicon(bundled_path("lexicon.tsv"), TABLE)
        canonical = dump_lexicon(lex)
        reloaded = load_text(canonical)
        assert reloaded == lex
        assert dump_lexicon(reloaded) == canonical
