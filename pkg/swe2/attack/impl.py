# -*- coding: utf-8 -*-

"""
Black box manipulation of whole messages.

For one message: pick the victim word, generate one candidate per
manipulation method, and keep the candidate whose message encoding lies the
farthest (cosine distance) from the original message encoding.
"""

import typing as T
import abc
import math
import random
import logging
import dataclasses
from collections import Counter

import numpy as np
from tqdm import tqdm

from ..exc import EmptyMessage, InvalidConfig, AttackError
from ..textnorm import TokenSeq, is_sentinel
from ..targetword import HateLexicon, eligible_indices, find_near_match
from ..embeddings.table import EmbeddingTable, word_vector
from ..harness.dataset import LabeledDataset
from .bugs import AttackMethod, METHOD_ORDER, ConfusionTable, apply_method

logger = logging.getLogger(__name__)


def select_victim(
    tokens: TokenSeq,
    hate_lexicon: HateLexicon,
    rng: random.Random,
) -> int:
    """
    Index of the word to manipulate: the first exact lexicon hit, else the
    closest near match within two characters, else a random non-sentinel word.
    """
    if not tokens:
        raise EmptyMessage.make("select_victim")
    for i, token in enumerate(tokens):
        if token in hate_lexicon:
            return i
    indices = eligible_indices(tokens)
    index = find_near_match(tokens, indices, hate_lexicon)
    if index is not None:
        return index
    return indices[rng.randrange(len(indices))]


# ------------------------------------------------------------------------------
# Sentence encoders
# ------------------------------------------------------------------------------
class SentenceEncoder(abc.ABC):
    """
    Maps a token sequence to a fixed length vector. Plug in any external
    sentence encoder by implementing :meth:`encode`.
    """

    @abc.abstractmethod
    def encode(self, tokens: TokenSeq) -> np.ndarray:
        raise NotImplementedError


class MeanWordVectorEncoder(SentenceEncoder):
    """
    Unit normalized mean of the word vectors.
    """

    def __init__(self, word_table: EmbeddingTable):
        self.word_table = word_table

    def encode(self, tokens: TokenSeq) -> np.ndarray:
        if not tokens:
            raise EmptyMessage.make("sentence_encode")
        mean = np.mean([word_vector(token, self.word_table) for token in tokens], axis=0)
        norm = np.linalg.norm(mean)
        if norm == 0:
            return mean
        return mean / norm


def sentence_encode(tokens: TokenSeq, word_table: EmbeddingTable) -> np.ndarray:
    return MeanWordVectorEncoder(word_table).encode(tokens)


def cosine_distance(u: np.ndarray, v: np.ndarray) -> float:
    """
    ``1 - cos(u, v)``, ``1.0`` if either vector is zero.
    """
    norm = float(np.linalg.norm(u) * np.linalg.norm(v))
    if norm == 0:
        return 1.0
    return 1.0 - float(np.dot(u, v)) / norm


# ------------------------------------------------------------------------------
# Message attack
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class Candidate:
    method: AttackMethod
    word: str
    distance: float

    def to_dict(self) -> dict:
        return {"method": self.method.value, "word": self.word, "distance": self.distance}


@dataclasses.dataclass(frozen=True)
class AttackPlan:
    """
    What was done to one message. An empty plan (no candidate) means the
    message was left unchanged.

    :param chosen: index into ``candidates`` of the applied manipulation.
    """

    victim_index: int
    original_word: str
    candidates: T.Tuple[Candidate, ...] = tuple()
    chosen: T.Optional[int] = None

    @property
    def is_empty(self) -> bool:
        return self.chosen is None

    @property
    def chosen_candidate(self) -> T.Optional[Candidate]:
        return None if self.chosen is None else self.candidates[self.chosen]

    @property
    def distance(self) -> float:
        return 0.0 if self.chosen is None else self.candidates[self.chosen].distance

    def to_dict(self) -> dict:
        return {
            "victim_index": self.victim_index,
            "original_word": self.original_word,
            "candidates": [c.to_dict() for c in self.candidates],
            "chosen": self.chosen,
            "distance": self.distance,
        }


def attack_message(
    tokens: TokenSeq,
    hate_lexicon: HateLexicon,
    confusion: ConfusionTable,
    encoder: SentenceEncoder,
    rng: random.Random,
) -> T.Tuple[TokenSeq, AttackPlan]:
    """
    Manipulate the victim word of one message.

    Candidates are generated in the order swap, delete, sub-c with the same
    ``rng``. Methods that don't apply to the victim are skipped. The first
    candidate with the maximal distance wins.
    """
    if not tokens:
        raise EmptyMessage.make("attack_message")
    victim = select_victim(tokens, hate_lexicon, rng)
    word = tokens[victim]
    if is_sentinel(word):
        return list(tokens), AttackPlan(victim_index=victim, original_word=word)

    original = encoder.encode(tokens)
    candidates = list()
    for method in METHOD_ORDER:
        try:
            new_word = apply_method(method, word, confusion, rng)
        except AttackError:
            continue
        new_tokens = list(tokens)
        new_tokens[victim] = new_word
        distance = cosine_distance(original, encoder.encode(new_tokens))
        candidates.append(Candidate(method=method, word=new_word, distance=distance))
    if not candidates:
        return list(tokens), AttackPlan(victim_index=victim, original_word=word)

    chosen = 0
    for i, candidate in enumerate(candidates):
        if candidate.distance > candidates[chosen].distance:
            chosen = i
    new_tokens = list(tokens)
    new_tokens[victim] = candidates[chosen].word
    plan = AttackPlan(
        victim_index=victim,
        original_word=word,
        candidates=tuple(candidates),
        chosen=chosen,
    )
    return new_tokens, plan


def attack_dataset(
    dataset: LabeledDataset,
    ratio: float,
    hate_lexicon: HateLexicon,
    confusion: ConfusionTable,
    encoder: SentenceEncoder,
    seed: int,
    classes: T.Optional[T.Collection[int]] = None,
    progress: bool = False,
) -> LabeledDataset:
    """
    Within each class, manipulate a random ``floor(ratio * n_class)`` subset of
    the rows. Labels never change. Manipulated rows carry their tokens and
    their :class:`AttackPlan`.

    :param classes: restrict the manipulation to these labels, e.g. ``{1}`` to
        attack hate speech only. The selected subsets do not depend on it.
    """
    if not (0.0 <= ratio <= 1.0) or math.isnan(ratio):
        raise InvalidConfig.make("ratio", ratio, "must be in [0, 1]")
    selector = np.random.default_rng(seed)
    selected = list()
    for label in (0, 1):
        indices = dataset.by_label(label)
        k = int(math.floor(ratio * len(indices) + 1e-9))
        picks = selector.choice(len(indices), size=k, replace=False)
        if classes is None or label in classes:
            selected.extend(indices[i] for i in picks)

    rows = list(dataset.rows)
    methods = Counter()
    for i in tqdm(sorted(selected), desc=f"attack {ratio:.1f}", disable=not progress):
        row = rows[i]
        tokens = row.get_tokens()
        if not tokens:
            continue
        rng = random.Random(f"{seed}:{i}")
        new_tokens, plan = attack_message(tokens, hate_lexicon, confusion, encoder, rng)
        rows[i] = row.with_tokens(new_tokens, plan)
        methods["unchanged" if plan.is_empty else plan.chosen_candidate.method.value] += 1
    logger.info(
        "attacked %d / %d rows at ratio %.2f: %s",
        len(selected),
        len(rows),
        ratio,
        dict(sorted(methods.items())),
    )
    return LabeledDataset(rows=rows)
