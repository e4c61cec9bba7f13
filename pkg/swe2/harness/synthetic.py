# -*- coding: utf-8 -*-

"""
A generated stand-in for a labeled hate speech corpus.

Filler words and toxic words are made of disjoint letter sets, so every toxic
word stays more than two characters away from any filler word, even after a
manipulation. Every hate message holds exactly one toxic word among filler
words. Only toxic words carry a sentiment valence.
"""

import typing as T
import random
import logging
import dataclasses

from ..exc import InvalidConfig
from ..targetword import SentimentLexicon, HateLexicon
from .dataset import LabeledRow, LabeledDataset

logger = logging.getLogger(__name__)

FILLER_CONSONANTS = "bdfghlmnprst"
FILLER_VOWELS = "aei"
TOXIC_CONSONANTS = "kzxvq"
TOXIC_VOWELS = "uo"
MIN_MESSAGE_LENGTH = 5
MAX_MESSAGE_LENGTH = 12


def _make_words(
    rng: random.Random,
    n: int,
    consonants: str,
    vowels: str,
    syllables: T.Tuple[int, int],
) -> T.List[str]:
    words = set()
    while len(words) < n:
        n_syllables = rng.randint(*syllables)
        words.add(
            "".join(rng.choice(consonants) + rng.choice(vowels) for _ in range(n_syllables))
        )
    return sorted(words)


@dataclasses.dataclass
class SyntheticCorpus:
    dataset: LabeledDataset
    sentiment_lexicon: SentimentLexicon
    hate_lexicon: HateLexicon
    filler_words: T.List[str]
    toxic_words: T.List[str]


def make_synthetic_corpus(
    n_messages: int = 2000,
    legit_per_hate: int = 5,
    n_toxic: int = 20,
    n_filler: int = 200,
    seed: int = 1,
) -> SyntheticCorpus:
    """
    :param legit_per_hate: legitimate messages per hate message.
    :param n_toxic: number of distinct toxic words, all in the hate lexicon.
    """
    if n_messages <= 0 or legit_per_hate <= 0 or n_toxic <= 0 or n_filler <= 0:
        raise InvalidConfig.make(
            "synthetic corpus",
            (n_messages, legit_per_hate, n_toxic, n_filler),
            "all sizes must be positive",
        )
    rng = random.Random(seed)
    filler = _make_words(rng, n_filler, FILLER_CONSONANTS, FILLER_VOWELS, (2, 3))
    toxic = _make_words(rng, n_toxic, TOXIC_CONSONANTS, TOXIC_VOWELS, (3, 4))
    valences = {word: -round(rng.uniform(2.0, 3.5), 1) for word in toxic}

    n_hate = int(round(n_messages / (legit_per_hate + 1)))
    rows = list()
    for ith in range(n_messages):
        label = 1 if ith < n_hate else 0
        length = rng.randint(MIN_MESSAGE_LENGTH, MAX_MESSAGE_LENGTH)
        tokens = [rng.choice(filler) for _ in range(length)]
        if label == 1:
            tokens[rng.randrange(length)] = rng.choice(toxic)
        rows.append(LabeledRow(text=" ".join(tokens), label=label))
    rng.shuffle(rows)
    logger.info(
        "generated %d messages (%d hate), %d filler and %d toxic words",
        n_messages,
        n_hate,
        len(filler),
        len(toxic),
    )
    return SyntheticCorpus(
        dataset=LabeledDataset(rows=rows),
        sentiment_lexicon=SentimentLexicon(entries=valences),
        hate_lexicon=HateLexicon(toxic),
        filler_words=filler,
        toxic_words=toxic,
    )
