# -*- coding: utf-8 -*-

import pytest
import torch

from swe2.model.featurize import Featurizer, collate
from swe2.model.network import build
from swe2.model.gradcheck import grad_check, grad_check_head
from swe2.targetword import find_target, message_rng
from swe2.textnorm import normalize
from swe2.tests.fixtures import (
    MESSAGES,
    LABELS,
    make_small_config,
    make_providers,
    make_sentiment_lexicon,
    make_hate_lexicon,
)


def _batch(config):
    featurizer = Featurizer(config, make_providers(config))
    slex, hlex = make_sentiment_lexicon(), make_hate_lexicon()
    samples = list()
    for text, label in zip(MESSAGES, LABELS):
        tokens = normalize(text)
        split = find_target(tokens, slex, hlex, message_rng(1, tokens))
        samples.append(featurizer.encode(split, label))
    return collate(samples)


@pytest.mark.parametrize("name", ["full", "-Char&Pho", "-LSTMs"])
def test_grad_check(name):
    config = make_small_config().with_ablation(name)
    network = build(config)
    assert grad_check(network, _batch(config), n_samples=200) < 1e-3


def test_grad_check_head():
    config = make_small_config()
    network = build(config)
    assert grad_check_head(network, _batch(config), class_weights=(1.0, 2.0)) < 1e-6


def test_network_is_untouched():
    config = make_small_config()
    network = build(config)
    before = {k: v.clone() for k, v in network.state_dict().items()}
    grad_check(network, _batch(config), n_samples=20)
    after = network.state_dict()
    assert all(v.dtype == torch.float32 for v in after.values())
    assert all(torch.equal(before[k], after[k]) for k in before)


if __name__ == "__main__":
    from swe2.tests.helper import run_cov_test

    run_cov_test(__file__, "swe2.model.gradcheck", preview=False)
