# -*- coding: utf-8 -*-

import pytest

from swe2.exc import InvalidConfig
from swe2.targetword import char_difference
from swe2.harness.synthetic import (
    MIN_MESSAGE_LENGTH,
    MAX_MESSAGE_LENGTH,
    make_synthetic_corpus,
)


class TestMakeSyntheticCorpus:
    def test_default(self):
        corpus = make_synthetic_corpus(seed=1)
        dataset = corpus.dataset
        assert len(dataset) == 2000
        assert dataset.class_counts() == {0: 1667, 1: 333}
        assert len(corpus.toxic_words) == 20
        assert len(corpus.filler_words) == 200
        assert set(corpus.hate_lexicon.words) == set(corpus.toxic_words)
        assert set(corpus.sentiment_lexicon.entries) == set(corpus.toxic_words)

    def test_messages(self):
        corpus = make_synthetic_corpus(n_messages=300, seed=2)
        toxic = set(corpus.toxic_words)
        filler = set(corpus.filler_words)
        for row in corpus.dataset:
            tokens = row.get_tokens()
            assert MIN_MESSAGE_LENGTH <= len(tokens) <= MAX_MESSAGE_LENGTH
            n_toxic = sum(1 for token in tokens if token in toxic)
            assert n_toxic == row.label
            assert all(token in toxic or token in filler for token in tokens)

    def test_valences(self):
        corpus = make_synthetic_corpus(n_messages=60, seed=3)
        for valence in corpus.sentiment_lexicon.entries.values():
            assert -3.5 <= valence <= -2.0

    def test_toxic_words_are_far_from_filler(self):
        corpus = make_synthetic_corpus(n_messages=60, n_toxic=10, n_filler=40, seed=4)
        for toxic in corpus.toxic_words:
            for filler in corpus.filler_words:
                assert char_difference(toxic, filler) > 2

    def test_deterministic(self):
        a = make_synthetic_corpus(n_messages=100, seed=5)
        b = make_synthetic_corpus(n_messages=100, seed=5)
        c = make_synthetic_corpus(n_messages=100, seed=6)
        assert a.dataset == b.dataset
        assert a.toxic_words == b.toxic_words
        assert a.dataset != c.dataset

    @pytest.mark.parametrize(
        "kwargs",
        [dict(n_messages=0), dict(legit_per_hate=0), dict(n_toxic=0), dict(n_filler=-1)],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidConfig):
            make_synthetic_corpus(**kwargs)


if __name__ == "__main__":
    from swe2.tests.helper import run_cov_test

    run_cov_test(__file__, "swe2.harness.synthetic", preview=False)
