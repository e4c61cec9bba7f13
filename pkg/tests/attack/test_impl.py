# -*- coding: utf-8 -*-

import random

import numpy as np
import pytest

from swe2.exc import EmptyMessage, InvalidConfig
from swe2.attack.bugs import AttackMethod
from swe2.attack.impl import (
    select_victim,
    MeanWordVectorEncoder,
    sentence_encode,
    cosine_distance,
    AttackPlan,
    attack_message,
    attack_dataset,
)
from swe2.harness.dataset import LabeledRow, LabeledDataset
from swe2.tests.fixtures import (
    make_hate_lexicon,
    make_confusion_table,
    make_word_table,
)

VOCAB = [
    "you", "are", "a", "limey", "trash", "trashy", "scum", "hello", "world",
    "love", "good", "day", "x", "aaaa", "zzz", "USER", "URL",
]


def _encoder() -> MeanWordVectorEncoder:
    return MeanWordVectorEncoder(make_word_table(VOCAB, dim=16))


class TestSelectVictim:
    def test_exact_hit_first(self):
        tokens = ["trashy", "you", "limey", "trash"]
        assert select_victim(tokens, make_hate_lexicon(), random.Random(1)) == 2

    def test_near_match(self):
        tokens = ["you", "are", "trashy"]
        assert select_victim(tokens, make_hate_lexicon(), random.Random(1)) == 2

    def test_random(self):
        tokens = ["USER", "hello", "world", "URL"]
        victims = {select_victim(tokens, make_hate_lexicon(), random.Random(s)) for s in range(50)}
        assert victims == {1, 2}

    def test_only_sentinels(self):
        assert select_victim(["USER"], make_hate_lexicon(), random.Random(1)) == 0

    def test_empty(self):
        with pytest.raises(EmptyMessage):
            select_victim([], make_hate_lexicon(), random.Random(1))


class TestEncoder:
    def test_unit_norm(self):
        vector = _encoder().encode(["you", "are", "a", "liemy"])
        assert vector.shape == (16,)
        assert np.linalg.norm(vector) == pytest.approx(1.0)

    def test_sentence_encode(self):
        encoder = _encoder()
        assert np.array_equal(
            sentence_encode(["hello", "world"], encoder.word_table),
            encoder.encode(["hello", "world"]),
        )

    def test_empty(self):
        with pytest.raises(EmptyMessage):
            _encoder().encode([])

    def test_cosine_distance(self):
        u = np.array([1.0, 0.0])
        assert cosine_distance(u, u) == pytest.approx(0.0)
        assert cosine_distance(u, np.array([0.0, 2.0])) == pytest.approx(1.0)
        assert cosine_distance(u, -u) == pytest.approx(2.0)
        assert cosine_distance(u, np.zeros(2)) == 1.0


def _check_candidate(method: AttackMethod, original: str, new_word: str):
    confusion = make_confusion_table()
    if method is AttackMethod.Swap:
        assert len(new_word) == len(original)
        diffs = [i for i in range(len(original)) if original[i] != new_word[i]]
        assert len(diffs) == 2 and diffs[1] == diffs[0] + 1
        i = diffs[0]
        assert new_word[i] == original[i + 1] and new_word[i + 1] == original[i]
        if len(original) >= 4:
            assert 0 < i and i + 1 < len(original) - 1
    elif method is AttackMethod.Delete:
        assert len(new_word) == len(original) - 1
        assert any(original[:i] + original[i + 1 :] == new_word for i in range(len(original)))
    else:
        assert len(new_word) == len(original)
        diffs = [i for i in range(len(original)) if original[i] != new_word[i]]
        assert len(diffs) == 1
        i = diffs[0]
        assert new_word[i] in confusion.get(original[i])


class TestAttackMessage:
    def test_limey(self):
        tokens = ["you", "are", "a", "limey"]
        new_tokens, plan = attack_message(
            tokens, make_hate_lexicon(), make_confusion_table(), _encoder(), random.Random(1)
        )
        assert plan.victim_index == 3
        assert plan.original_word == "limey"
        assert [c.method for c in plan.candidates] == [
            AttackMethod.Swap,
            AttackMethod.Delete,
            AttackMethod.SubC,
        ]
        assert new_tokens[:3] == tokens[:3]
        assert new_tokens[3] == plan.chosen_candidate.word
        assert plan.distance == max(c.distance for c in plan.candidates)
        assert plan.to_dict()["chosen"] == plan.chosen

    def test_subc_only(self):
        # a single character word can only be substituted
        new_tokens, plan = attack_message(
            ["a"], make_hate_lexicon(), make_confusion_table(), _encoder(), random.Random(1)
        )
        assert [c.method for c in plan.candidates] == [AttackMethod.SubC]
        assert new_tokens[0] in ("@", "4")

    def test_unchanged(self):
        hlex, confusion, encoder = make_hate_lexicon(), make_confusion_table(), _encoder()
        for tokens in [["x"], ["USER", "URL"]]:
            new_tokens, plan = attack_message(tokens, hlex, confusion, encoder, random.Random(1))
            assert new_tokens == tokens
            assert plan.is_empty
            assert plan.chosen_candidate is None
            assert plan.distance == 0.0
            assert plan.candidates == tuple()

    def test_empty(self):
        with pytest.raises(EmptyMessage):
            attack_message(
                [], make_hate_lexicon(), make_confusion_table(), _encoder(), random.Random(1)
            )

    def test_contracts(self):
        hlex, confusion, encoder = make_hate_lexicon(), make_confusion_table(), _encoder()
        gen = random.Random(7)
        n_changed = 0
        for seed in range(10000):
            tokens = [gen.choice(VOCAB) for _ in range(gen.randint(1, 6))]
            new_tokens, plan = attack_message(tokens, hlex, confusion, encoder, random.Random(seed))
            assert len(new_tokens) == len(tokens)
            v = plan.victim_index
            assert plan.original_word == tokens[v]
            assert new_tokens[:v] == tokens[:v]
            assert new_tokens[v + 1 :] == tokens[v + 1 :]
            if plan.is_empty:
                assert new_tokens == tokens
                continue
            n_changed += 1
            methods = [c.method for c in plan.candidates]
            assert methods == sorted(methods, key=list(AttackMethod).index)
            original = encoder.encode(tokens)
            for candidate in plan.candidates:
                _check_candidate(candidate.method, tokens[v], candidate.word)
                attacked = list(tokens)
                attacked[v] = candidate.word
                assert candidate.distance == pytest.approx(
                    cosine_distance(original, encoder.encode(attacked)), abs=1e-12
                )
            distances = [c.distance for c in plan.candidates]
            assert plan.chosen == distances.index(max(distances))
            assert new_tokens[v] == plan.chosen_candidate.word
        assert n_changed > 5000

    def test_deterministic(self):
        hlex, confusion, encoder = make_hate_lexicon(), make_confusion_table(), _encoder()
        tokens = ["hello", "world", "you", "trashy"]
        a = attack_message(tokens, hlex, confusion, encoder, random.Random(5))
        b = attack_message(tokens, hlex, confusion, encoder, random.Random(5))
        assert a == b


def _dataset() -> LabeledDataset:
    rows = list()
    for i in range(40):
        label = int(i % 4 == 0)
        text = f"you are a limey number{i}" if label else f"hello good world day{i}"
        rows.append(LabeledRow(text=text, label=label))
    return LabeledDataset(rows=rows)


class TestAttackDataset:
    def _attack(self, ratio, **kwargs):
        return attack_dataset(
            _dataset(),
            ratio,
            make_hate_lexicon(),
            make_confusion_table(),
            _encoder(),
            seed=1,
            **kwargs,
        )

    @pytest.mark.parametrize("ratio, n_hate, n_legit", [(0.0, 0, 0), (0.5, 5, 15), (1.0, 10, 30)])
    def test_counts(self, ratio, n_hate, n_legit):
        attacked = self._attack(ratio)
        assert attacked.labels == _dataset().labels
        planned = [row for row in attacked if row.plan is not None]
        assert sum(row.label for row in planned) == n_hate
        assert sum(1 - row.label for row in planned) == n_legit
        for row in planned:
            assert isinstance(row.plan, AttackPlan)
            assert row.tokens is not None

    def test_ratio_zero_is_identity(self):
        assert self._attack(0.0).rows == _dataset().rows

    def test_classes(self):
        both = self._attack(0.5)
        hate_only = self._attack(0.5, classes={1})
        assert all(row.plan is None for row in hate_only if row.label == 0)
        assert [row.plan is not None for row in hate_only if row.label == 1] == [
            row.plan is not None for row in both if row.label == 1
        ]
        assert [row.tokens for row in hate_only if row.label == 1] == [
            row.tokens for row in both if row.label == 1
        ]

    def test_deterministic(self):
        assert self._attack(0.3).rows == self._attack(0.3).rows

    def test_hate_victim_is_lexicon_word(self):
        for row in self._attack(1.0):
            if row.label == 1:
                assert row.plan.original_word == "limey"

    @pytest.mark.parametrize("ratio", [-0.1, 1.5, float("nan")])
    def test_invalid_ratio(self, ratio):
        with pytest.raises(InvalidConfig):
            self._attack(ratio)


if __name__ == "__main__":
    from swe2.tests.helper import run_cov_test

    run_cov_test(__file__, "swe2.attack.impl", preview=False)
