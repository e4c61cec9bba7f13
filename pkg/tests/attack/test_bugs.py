# -*- coding: utf-8 -*-

import random

import pytest

from swe2.exc import ParseError, TooShort, NoEligibleChar, NoEligiblePosition, AttackError
from swe2.attack.bugs import (
    AttackMethod,
    METHOD_ORDER,
    ConfusionTable,
    swap_positions,
    bug_swap,
    bug_delete,
    bug_subc,
    apply_method,
)
from swe2.tests.fixtures import make_confusion_table


def test_method_order():
    assert [m.value for m in METHOD_ORDER] == ["Swap", "Delete", "SubC"]


class TestSwap:
    def test_swap_positions(self):
        assert swap_positions("limey") == [1, 2]
        assert swap_positions("ab") == [0]
        assert swap_positions("aab") == [1]
        assert swap_positions("abc") == [0, 1]
        assert swap_positions("abba") == []
        assert swap_positions("aaaa") == []

    def test_limey(self):
        results = {bug_swap("limey", random.Random(seed)) for seed in range(50)}
        assert results == {"lmiey", "liemy"}

    def test_keeps_first_and_last(self):
        rng = random.Random(1)
        for _ in range(200):
            word = "".join(rng.choice("abcdef") for _ in range(rng.randint(4, 9)))
            try:
                new_word = bug_swap(word, rng)
            except NoEligiblePosition:
                assert not swap_positions(word)
                continue
            assert new_word[0] == word[0]
            assert new_word[-1] == word[-1]
            assert sorted(new_word) == sorted(word)
            diffs = [i for i in range(len(word)) if word[i] != new_word[i]]
            assert len(diffs) == 2
            assert diffs[1] == diffs[0] + 1

    def test_errors(self):
        with pytest.raises(TooShort):
            bug_swap("a", random.Random(1))
        with pytest.raises(NoEligiblePosition):
            bug_swap("aaaa", random.Random(1))


class TestDelete:
    def test_delete(self):
        rng = random.Random(1)
        results = {bug_delete("trash", rng) for _ in range(100)}
        assert results == {"rash", "tash", "trsh", "trah", "tras"}

    def test_too_short(self):
        with pytest.raises(TooShort):
            bug_delete("a", random.Random(1))
        with pytest.raises(AttackError):
            bug_delete("", random.Random(1))


class TestSubC:
    def test_subc(self):
        table = make_confusion_table()
        results = {bug_subc("trash", table, random.Random(seed)) for seed in range(100)}
        assert results == {"7rash", "tr@sh", "tr4sh", "tra$h", "tra5h"}

    def test_no_eligible_char(self):
        with pytest.raises(NoEligibleChar):
            bug_subc("xyz", make_confusion_table(), random.Random(1))


class TestConfusionTable:
    def test_basic(self):
        table = make_confusion_table()
        assert "a" in table
        assert "x" not in table
        assert table.get("i") == ("1", "!")
        assert table.get("x") == tuple()
        assert table.eligible_positions("trash") == [0, 2, 3]

    @pytest.mark.parametrize(
        "substitutes",
        [
            {"ab": ("@",)},
            {"a": ()},
            {"a": ("@@",)},
            {"a": ("a",)},
        ],
    )
    def test_invalid(self, substitutes):
        with pytest.raises(ValueError):
            ConfusionTable(substitutes=substitutes)

    def test_from_file(self, tmp_path):
        path = tmp_path / "confusion.tsv"
        path.write_text("# comment\na\t@,4\n\ne\t3\n", encoding="utf-8")
        table = ConfusionTable.from_file(path)
        assert table.substitutes == {"a": ("@", "4"), "e": ("3",)}

    @pytest.mark.parametrize("line", ["a @", "a\t@@", "ab\t@", "a\ta", "a\t"])
    def test_from_file_error(self, tmp_path, line):
        path = tmp_path / "confusion.tsv"
        path.write_text(f"e\t3\n{line}\n", encoding="utf-8")
        with pytest.raises(ParseError) as e:
            ConfusionTable.from_file(path)
        assert e.value.line == 2

    def test_default(self):
        table = ConfusionTable.default()
        assert table.get("a") == ("@", "4")
        assert table.get("s") == ("$", "5")
        assert len(table) >= 10


def test_apply_method():
    table = make_confusion_table()
    for method in AttackMethod:
        new_word = apply_method(method, "limey", table, random.Random(3))
        assert new_word != "limey"
    assert len(apply_method(AttackMethod.Delete, "limey", table, random.Random(3))) == 4


if __name__ == "__main__":
    from swe2.tests.helper import run_cov_test

    run_cov_test(__file__, "swe2.attack.bugs", preview=False)
