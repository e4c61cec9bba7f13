# -*- coding: utf-8 -*-

"""
CBOW with negative sampling over symbol sequences (characters of words, or
phonemes of words).

For every position of every sequence, the mean of the context symbol vectors
predicts the center symbol against ``negative_samples`` noise symbols drawn
from the unigram distribution raised to the power 0.75. Plain SGD with a
learning rate decaying linearly down to ``min_learning_rate``.

Usage example::

    cfg = CbowConfig.make(dim=20, seed=1)
    table = train_cbow(char_corpus(token_seqs), cfg, kind=EmbeddingKind.Char)
"""

import typing as T
import logging
import dataclasses
from collections import Counter

import numpy as np
import torch
import torch.nn as nn
import torch.nn.functional as F
from tqdm import tqdm

from ..exc import EmptyCorpus, InvalidConfig
from ..config import get_default_seed
from .table import EmbeddingKind, EmbeddingTable

logger = logging.getLogger(__name__)

UNIGRAM_POWER = 0.75


@dataclasses.dataclass(frozen=True)
class CbowConfig:
    """
    Don't use the ``__init__`` constructor directly. Use :meth:`CbowConfig.make`.
    """

    dim: int = dataclasses.field(default=20)
    window: int = dataclasses.field(default=3)
    epochs: int = dataclasses.field(default=15)
    learning_rate: float = dataclasses.field(default=0.025)
    negative_samples: int = dataclasses.field(default=5)
    seed: int = dataclasses.field(default=1)
    batch_size: int = dataclasses.field(default=64)
    min_learning_rate: float = dataclasses.field(default=0.0001)

    @classmethod
    def make(
        cls,
        dim: int = 20,
        window: int = 3,
        epochs: int = 15,
        learning_rate: float = 0.025,
        negative_samples: int = 5,
        seed: T.Optional[int] = None,
        batch_size: int = 64,
        min_learning_rate: float = 0.0001,
    ) -> "CbowConfig":
        """
        :param seed: default to ``$SWE2_SEED``, see :func:`~swe2.config.get_default_seed`.
        """
        if seed is None:
            seed = get_default_seed()
        for field, value in [
            ("dim", dim),
            ("window", window),
            ("epochs", epochs),
            ("learning_rate", learning_rate),
            ("negative_samples", negative_samples),
            ("batch_size", batch_size),
        ]:
            if value <= 0:
                raise InvalidConfig.make(field, value, "must be positive")
        if seed < 0:
            raise InvalidConfig.make("seed", seed, "must be >= 0")
        if not (0 <= min_learning_rate <= learning_rate):
            raise InvalidConfig.make(
                "min_learning_rate", min_learning_rate, "must be in [0, learning_rate]"
            )
        return cls(
            dim=dim,
            window=window,
            epochs=epochs,
            learning_rate=learning_rate,
            negative_samples=negative_samples,
            seed=seed,
            batch_size=batch_size,
            min_learning_rate=min_learning_rate,
        )


class CbowModel(nn.Module):
    """
    Input (context) and output (center) embeddings.
    """

    def __init__(
        self,
        vocab_size: int,
        dim: int,
        generator: T.Optional[torch.Generator] = None,
    ):
        super().__init__()
        self.input_embedding = nn.Embedding(vocab_size, dim)
        self.output_embedding = nn.Embedding(vocab_size, dim)
        bound = 0.5 / dim
        with torch.no_grad():
            self.input_embedding.weight.copy_(
                torch.rand(vocab_size, dim, generator=generator) * 2 * bound - bound
            )
            self.output_embedding.weight.zero_()

    def forward(
        self,
        contexts: torch.Tensor,
        context_mask: torch.Tensor,
        centers: torch.Tensor,
        negatives: torch.Tensor,
    ) -> torch.Tensor:
        """
        Summed negative sampling loss of a batch.

        :param contexts: ``(B, 2 * window)`` context ids, padded.
        :param context_mask: ``(B, 2 * window)``, 1.0 for real context ids.
        :param centers: ``(B,)`` center ids.
        :param negatives: ``(B, k)`` noise ids. Noise ids equal to the center
            do not count.
        """
        mask = context_mask.to(self.input_embedding.weight.dtype)
        summed = (self.input_embedding(contexts) * mask.unsqueeze(-1)).sum(dim=1)
        hidden = summed / mask.sum(dim=1, keepdim=True).clamp(min=1.0)
        positive = (self.output_embedding(centers) * hidden).sum(dim=-1)
        negative = torch.bmm(
            self.output_embedding(negatives), hidden.unsqueeze(-1)
        ).squeeze(-1)
        negative_mask = (negatives != centers.unsqueeze(-1)).to(hidden.dtype)
        loss = -F.logsigmoid(positive) - (F.logsigmoid(-negative) * negative_mask).sum(dim=1)
        return loss.sum()

    def symbol_vectors(self) -> np.ndarray:
        """
        Mean of the input and output embedding of every symbol.
        """
        with torch.no_grad():
            weights = (self.input_embedding.weight + self.output_embedding.weight) / 2
        return weights.detach().cpu().double().numpy()


@dataclasses.dataclass
class CbowBatch:
    contexts: torch.Tensor
    context_mask: torch.Tensor
    centers: torch.Tensor
    negatives: torch.Tensor


class CbowTrainer:
    """
    Owns the vocabulary, the training examples and the model of one CBOW run.

    :param corpus: symbol sequences, those shorter than 2 are skipped.
    """

    def __init__(
        self,
        corpus: T.Iterable[T.Sequence[str]],
        config: CbowConfig,
        kind: EmbeddingKind = EmbeddingKind.Char,
        dtype: torch.dtype = torch.float32,
    ):
        corpus = list(corpus)
        sequences = [list(seq) for seq in corpus if len(seq) >= 2]
        if not sequences:
            raise EmptyCorpus.make(len(corpus))
        if len(sequences) < len(corpus):
            logger.info("skipped %d sequences shorter than 2", len(corpus) - len(sequences))
        self.config = config
        self.kind = EmbeddingKind(kind)
        self.dtype = dtype

        counts = Counter(symbol for seq in sequences for symbol in seq)
        self.symbols: T.List[str] = sorted(counts)
        self.index: T.Dict[str, int] = {s: i for i, s in enumerate(self.symbols)}
        frequencies = torch.tensor(
            [counts[s] for s in self.symbols], dtype=torch.float64
        )
        noise = frequencies.pow(UNIGRAM_POWER)
        self.noise_distribution = noise / noise.sum()

        self._build_examples(sequences)
        self.generator = torch.Generator().manual_seed(config.seed)
        self.model = CbowModel(len(self.symbols), config.dim, self.generator).to(dtype)
        self.loss_history: T.List[float] = list()

    def _build_examples(self, sequences: T.List[T.List[str]]):
        window = self.config.window
        width = 2 * window
        contexts, masks, centers = list(), list(), list()
        for seq in sequences:
            ids = [self.index[symbol] for symbol in seq]
            for c, center in enumerate(ids):
                context = [
                    ids[j]
                    for j in range(max(0, c - window), min(len(ids), c + window + 1))
                    if j != c
                ]
                centers.append(center)
                contexts.append(context + [0] * (width - len(context)))
                masks.append([1.0] * len(context) + [0.0] * (width - len(context)))
        self.contexts = torch.tensor(contexts, dtype=torch.long)
        self.context_mask = torch.tensor(masks, dtype=self.dtype)
        self.centers = torch.tensor(centers, dtype=torch.long)

    @property
    def n_examples(self) -> int:
        return int(self.centers.shape[0])

    def sample_batch(self, indices: torch.Tensor) -> CbowBatch:
        n = int(indices.shape[0])
        negatives = torch.multinomial(
            self.noise_distribution,
            n * self.config.negative_samples,
            replacement=True,
            generator=self.generator,
        ).view(n, self.config.negative_samples)
        return CbowBatch(
            contexts=self.contexts[indices],
            context_mask=self.context_mask[indices],
            centers=self.centers[indices],
            negatives=negatives,
        )

    def loss(self, batch: CbowBatch) -> torch.Tensor:
        return self.model(
            batch.contexts, batch.context_mask, batch.centers, batch.negatives
        )

    def fit(self, progress: bool = False) -> EmbeddingTable:
        cfg = self.config
        n_batches = (self.n_examples + cfg.batch_size - 1) // cfg.batch_size
        total_steps = cfg.epochs * n_batches
        optimizer = torch.optim.SGD(self.model.parameters(), lr=cfg.learning_rate)
        step = 0
        for epoch in tqdm(range(cfg.epochs), desc="cbow", disable=not progress):
            order = torch.randperm(self.n_examples, generator=self.generator)
            epoch_loss = 0.0
            for start in range(0, self.n_examples, cfg.batch_size):
                lr = cfg.learning_rate * (1.0 - step / total_steps)
                for group in optimizer.param_groups:
                    group["lr"] = max(cfg.min_learning_rate, lr)
                batch = self.sample_batch(order[start : start + cfg.batch_size])
                optimizer.zero_grad()
                loss = self.loss(batch)
                loss.backward()
                optimizer.step()
                epoch_loss += loss.item()
                step += 1
            self.loss_history.append(epoch_loss / self.n_examples)
            logger.debug(
                "cbow epoch %d/%d, mean loss %.4f",
                epoch + 1,
                cfg.epochs,
                self.loss_history[-1],
            )
        logger.info(
            "trained %s cbow on %d examples, %d symbols, loss %.4f -> %.4f",
            self.kind.value,
            self.n_examples,
            len(self.symbols),
            self.loss_history[0],
            self.loss_history[-1],
        )
        return self.to_table()

    def to_table(self) -> EmbeddingTable:
        weights = self.model.symbol_vectors()
        return EmbeddingTable(
            kind=self.kind,
            dim=self.config.dim,
            vectors={symbol: weights[i] for i, symbol in enumerate(self.symbols)},
        )


def train_cbow(
    corpus: T.Iterable[T.Sequence[str]],
    config: CbowConfig,
    kind: EmbeddingKind = EmbeddingKind.Char,
    progress: bool = False,
) -> EmbeddingTable:
    """
    Train CBOW embeddings for every symbol of the corpus.

    :raises EmptyCorpus: if no sequence has 2 symbols or more.
    """
    return CbowTrainer(corpus, config, kind=kind).fit(progress=progress)
