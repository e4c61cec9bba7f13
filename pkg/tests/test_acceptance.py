# -*- coding: utf-8 -*-

"""
End to end experiments on the synthetic corpus. Several minutes on a CPU, skip
with ``SWE2_SKIP_SLOW=1``.
"""

import pytest

from swe2.config import PipelineConfig
from swe2.embeddings.table import EmbeddingKind, EmbeddingTable
from swe2.embeddings.cbow import CbowConfig, train_cbow
from swe2.embeddings.subword import char_corpus, phoneme_corpus
from swe2.attack.bugs import ConfusionTable
from swe2.attack.impl import attack_dataset
from swe2.model.config import ModelConfig
from swe2.model.featurize import Providers
from swe2.harness.dataset import split
from swe2.harness.synthetic import make_synthetic_corpus
from swe2.harness.experiments import default_encoder, run_ablation
from swe2.harness.analysis import sentiment_shift, mean_abs_scores
from swe2.tests.constants import IS_SKIP_SLOW

pytestmark = [
    pytest.mark.slow,
    pytest.mark.skipif(IS_SKIP_SLOW, reason="slow"),
]

ROBUST_RATIOS = (0.0, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)


@pytest.fixture(scope="module")
def corpus():
    return make_synthetic_corpus(n_messages=2000, legit_per_hate=5, n_toxic=20, seed=1)


@pytest.fixture(scope="module")
def parts(corpus):
    return split(corpus.dataset, seed=1)


@pytest.fixture(scope="module")
def confusion():
    return ConfusionTable.default()


@pytest.fixture(scope="module")
def providers(corpus, parts, confusion):
    train = parts[0]
    token_seqs = [row.get_tokens() for row in train]
    char_table = train_cbow(
        char_corpus(token_seqs, confusion=confusion, seed=1, unique=True),
        CbowConfig.make(dim=20, window=2, epochs=5, seed=1),
        kind=EmbeddingKind.Char,
    )
    pho_table = train_cbow(
        phoneme_corpus(token_seqs, unique=True),
        CbowConfig.make(dim=20, window=2, epochs=5, seed=1),
        kind=EmbeddingKind.Phoneme,
    )
    return Providers(
        word_table=EmbeddingTable.empty(EmbeddingKind.Word, 50),
        char_table=char_table,
        pho_table=pho_table,
    )


@pytest.fixture(scope="module")
def results(corpus, parts, providers, confusion):
    train, valid, test = parts
    config = ModelConfig.make(
        learning_rate=0.003,
        epochs=30,
        batch_size=64,
        seed=1,
    )
    return run_ablation(
        train,
        valid,
        test,
        config,
        providers,
        corpus.sentiment_lexicon,
        corpus.hate_lexicon,
        confusion,
        seed=1,
        variants=("full", "-Char&Pho"),
        ratios=ROBUST_RATIOS,
    )


def test_clean_accuracy(results):
    metrics = results["full"].at(0.0)
    assert metrics.accuracy >= 0.95
    assert metrics.macro_f1 >= 0.93


def test_half_attack_drop(results):
    full = results["full"]
    assert full.at(0.0).accuracy - full.at(0.5).accuracy <= 0.03


def test_subword_channels_add_robustness(results):
    for ratio in ROBUST_RATIOS[1:]:
        assert results["full"].at(ratio).accuracy >= results["-Char&Pho"].at(ratio).accuracy


def test_manipulation_removes_sentiment(corpus, parts, providers, confusion):
    test = parts[2]
    attacked = attack_dataset(
        test,
        1.0,
        corpus.hate_lexicon,
        confusion,
        default_encoder(providers, 50),
        seed=1,
    )
    shifts = sentiment_shift(
        test,
        attacked,
        corpus.sentiment_lexicon,
        alpha=PipelineConfig.make().compound_alpha,
    )
    hate_before, hate_after = mean_abs_scores(shifts, label=1, manipulated_only=True)
    assert hate_after < hate_before
    legit_before, legit_after = mean_abs_scores(shifts, label=0)
    assert abs(legit_after - legit_before) < 0.05


if __name__ == "__main__":
    from swe2.tests.helper import run_cov_test

    run_cov_test(__file__, "swe2.harness", preview=False)
