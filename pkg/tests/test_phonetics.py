# -*- coding: utf-8 -*-

import random

import pytest

from swe2.exc import ParseError, UnmappableInput
from swe2.phonetics import (
    PHONEME_INVENTORY,
    LEET_TABLE,
    strip_stress,
    leet_normalize,
    PronDict,
    load_pron_dict,
    ChunkTable,
    load_chunk_table,
    write_chunk_table,
    get_default_chunk_table,
    g2p_fallback,
    to_phonemes,
    align_word,
    build_chunk_table,
)
from swe2.tests.fixtures import PRON_DICT_LINES, CONFUSION, make_pron_dict


class TestPronDict:
    def test_from_lines(self):
        pron_dict = make_pron_dict()
        assert pron_dict.get("hello") == ("HH", "AH", "L", "OW")
        assert pron_dict.get("limey") == ("L", "AY", "M", "IY")
        assert "HELLO" not in pron_dict
        assert len(pron_dict) == len(PRON_DICT_LINES) - 2

    def test_first_variant_wins(self):
        pron_dict = PronDict.from_lines(["A  AH0", "A(1)  EY1", ";;; comment"])
        assert pron_dict.get("a") == ("AH",)
        assert len(pron_dict) == 1

    def test_inline_comment(self):
        pron_dict = PronDict.from_lines(["d'artagnan D AH0 R T AE1 NG Y AH0 N # place, french"])
        assert pron_dict.get("d'artagnan")[-1] == "N"

    def test_load_pron_dict(self, tmp_path):
        path = tmp_path / "cmudict.dict"
        path.write_text("\n".join(PRON_DICT_LINES) + "\n", encoding="latin-1")
        assert load_pron_dict(path).get("trash") == ("T", "R", "AE", "SH")

    @pytest.mark.parametrize("line", ["HELLO", "HELLO  HH XX1 L"])
    def test_parse_error(self, tmp_path, line):
        path = tmp_path / "bad.dict"
        path.write_text(f"A  AH0\n{line}\n", encoding="latin-1")
        with pytest.raises(ParseError) as e:
            load_pron_dict(path)
        assert e.value.line == 2
        assert e.value.path == str(path)


def test_strip_stress_and_leet():
    assert strip_stress("AH0") == "AH"
    assert strip_stress("OW1") == "OW"
    assert strip_stress("L") == "L"
    assert leet_normalize("tr@sh") == "trash"
    assert leet_normalize("H3LL0!") == "helloi"
    assert leet_normalize("#?") == ""


class TestChunkTable:
    def test_default_table(self):
        table = get_default_chunk_table()
        for letter in "abcdefghijklmnopqrstuvwxyz":
            assert letter in table
        for chunk, phonemes in table.sorted_items():
            assert phonemes
            assert set(phonemes) <= set(PHONEME_INVENTORY)
        lengths = [len(chunk) for chunk, _ in table.sorted_items()]
        assert lengths == sorted(lengths, reverse=True)

    def test_transcribe(self):
        table = ChunkTable({"sh": ("SH",), "s": ("S",), "h": ("HH",), "a": ("AE",)})
        assert table.transcribe("sha") == ("SH", "AE")
        assert table.transcribe("hs") == ("HH", "S")
        assert table.transcribe("xyz") == ()

    def test_file(self, tmp_path):
        path = tmp_path / "chunks.tsv"
        table = ChunkTable({"ph": ("F",), "a": ("AH",), "x": ("K", "S")})
        write_chunk_table(table, path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "ph\tF"
        assert load_chunk_table(path).chunks == table.chunks

        path.write_text("ph\tFF\n", encoding="utf-8")
        with pytest.raises(ParseError):
            load_chunk_table(path)
        path.write_text("ph F\n", encoding="utf-8")
        with pytest.raises(ParseError):
            load_chunk_table(path)


class TestG2p:
    def test_fallback(self):
        phonemes = g2p_fallback("jooz")
        assert phonemes[0] == "JH"
        assert phonemes[-1] == "Z"
        assert g2p_fallback("a") == ("AH",)
        with pytest.raises(UnmappableInput):
            g2p_fallback("")
        with pytest.raises(UnmappableInput):
            g2p_fallback("#")

    def test_to_phonemes(self):
        pron_dict = make_pron_dict()
        assert to_phonemes("hello", pron_dict) == ("HH", "AH", "L", "OW")
        assert to_phonemes("zzqx", pron_dict) == g2p_fallback("zzqx")
        assert to_phonemes("tr@sh", pron_dict) == ("T", "R", "AE", "SH")
        assert to_phonemes("tr4sh", None) == g2p_fallback("trash")

    def test_dictionary_fidelity(self):
        pron_dict = make_pron_dict()
        for word, phonemes in pron_dict.items():
            assert to_phonemes(word, pron_dict) == phonemes

    def test_totality_and_determinism(self):
        rng = random.Random(1)
        subs = "".join(sub for values in CONFUSION.values() for sub in values)
        alphabet = "abcdefghijklmnopqrstuvwxyz0123456789" + subs + "".join(LEET_TABLE)
        for _ in range(2000):
            word = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 10)))
            phonemes = to_phonemes(word)
            assert phonemes
            assert set(phonemes) <= set(PHONEME_INVENTORY)
            assert to_phonemes(word) == phonemes


class TestBuildChunkTable:
    def test_align_word(self):
        seed = get_default_chunk_table()
        phonemes = ("HH", "AH", "L", "OW")
        pairs = align_word("hello", phonemes, seed)
        assert "".join(chunk for chunk, _ in pairs) == "hello"
        assert tuple(p for _, chunk_phonemes in pairs for p in chunk_phonemes) == phonemes
        assert align_word("a", ("AH", "AH", "AH"), seed) is None

    def test_build(self):
        table = build_chunk_table(make_pron_dict(), min_count=1)
        for letter in "abcdefghijklmnopqrstuvwxyz":
            assert letter in table
        assert table.get("sh") == ("SH",)
        assert to_phonemes("trash", None, table)[-1] == "SH"


if __name__ == "__main__":
    from swe2.tests.helper import run_cov_test

    run_cov_test(__file__, "swe2.phonetics", preview=False)
