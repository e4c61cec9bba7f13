# -*- coding: utf-8 -*-

"""
Small in-memory lexica, dictionaries and embedding tables for unit tests.
"""

import typing as T
import string

import numpy as np

from ..targetword import SentimentLexicon, HateLexicon
from ..phonetics import PHONEME_INVENTORY, PronDict
from ..embeddings.table import EmbeddingKind, EmbeddingTable
from ..attack.bugs import ConfusionTable
from ..model.config import ModelConfig
from ..model.featurize import Providers

PRON_DICT_LINES = [
    ";;; a tiny CMU style dictionary",
    "HELLO  HH AH0 L OW1",
    "HELLO(1)  HH EH0 L OW1",
    "LIMEY  L AY1 M IY0",
    "TRASH  T R AE1 SH",
    "WORLD  W ER1 L D",
    "LOVE  L AH1 V",
    "HATE  HH EY1 T",
    "YOU  Y UW1",
    "ARE  AA1 R",
    "A  AH0",
    "GOOD  G UH1 D",
    "DAY  D EY1",
    "SCUM  S K AH1 M",
    "PHONE  F OW1 N",
    "NIGHT  N AY1 T",
]

SENTIMENT_ENTRIES = {
    "love": 3.2,
    "good": 1.9,
    "hate": -2.7,
    "bad": -2.5,
    "ugly": -2.1,
    "nice": 1.8,
}

HATE_WORDS = ["limey", "trash", "scum", "vermin"]

CONFUSION = {
    "a": ("@", "4"),
    "e": ("3",),
    "i": ("1", "!"),
    "o": ("0",),
    "s": ("$", "5"),
    "t": ("7",),
}

CHAR_SYMBOLS = string.ascii_lowercase + string.digits + "@$!|+"

# one message per selection path, plus one with a sentinel
MESSAGES = [
    "@bob you are a limey",
    "i love this good day",
    "what a trashy night http://t.co/x",
    "hello world",
]
LABELS = [1, 0, 1, 0]


def make_sentiment_lexicon() -> SentimentLexicon:
    return SentimentLexicon(entries=dict(SENTIMENT_ENTRIES))


def make_hate_lexicon() -> HateLexicon:
    return HateLexicon(HATE_WORDS)


def make_pron_dict() -> PronDict:
    return PronDict.from_lines(PRON_DICT_LINES)


def make_confusion_table() -> ConfusionTable:
    return ConfusionTable(substitutes=dict(CONFUSION))


def random_table(
    kind: EmbeddingKind,
    symbols: T.Iterable[str],
    dim: int,
    seed: int = 1,
) -> EmbeddingTable:
    rng = np.random.default_rng(seed)
    return EmbeddingTable(
        kind=kind,
        dim=dim,
        vectors={symbol: rng.normal(0.0, 0.5, dim) for symbol in sorted(set(symbols))},
    )


def make_char_table(dim: int = 20, seed: int = 1) -> EmbeddingTable:
    return random_table(EmbeddingKind.Char, CHAR_SYMBOLS, dim, seed)


def make_pho_table(dim: int = 20, seed: int = 2) -> EmbeddingTable:
    return random_table(EmbeddingKind.Phoneme, PHONEME_INVENTORY, dim, seed)


def make_word_table(
    words: T.Iterable[str] = (),
    dim: int = 50,
    seed: int = 3,
) -> EmbeddingTable:
    return random_table(EmbeddingKind.Word, words, dim, seed)


def make_small_config(**kwargs) -> ModelConfig:
    """
    A fast network for unit tests.
    """
    params = dict(
        char_dim=6,
        pho_dim=5,
        word_dim=8,
        cnn_filters_per_width=3,
        lstm_hidden=4,
        lstm_layers=2,
        mlp_hidden=(8,),
        dropout_rate=0.0,
        batch_size=4,
        epochs=2,
        seed=1,
    )
    params.update(kwargs)
    return ModelConfig.make(**params)


def make_providers(config: ModelConfig) -> Providers:
    return Providers(
        word_table=make_word_table(["you", "are", "a", "love", "good", "day"], config.word_dim),
        char_table=make_char_table(config.char_dim),
        pho_table=make_pho_table(config.pho_dim),
        pron_dict=make_pron_dict(),
    )
