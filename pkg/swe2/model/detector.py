# -*- coding: utf-8 -*-

"""
The end to end detector: raw text -> tokens -> target split -> network ->
prediction.

Usage example::

    detector, history = Detector.fit(train_rows, valid_rows, config, providers, slex, hlex)
    detector.predict("@bob you are a limey")
    detector.save("model.json")
    detector = Detector.load("model.json")
"""

import typing as T
import json
import logging
from pathlib import Path

import torch

from ..exc import EmptyMessage, EmptyDataset, ParseError
from ..compat import cached_property
from ..config import PipelineConfig
from ..textnorm import TokenSeq, normalize
from ..targetword import (
    SentimentLexicon,
    HateLexicon,
    TargetSplit,
    find_target,
    message_rng,
)
from ..phonetics import load_pron_dict
from ..embeddings.table import EmbeddingKind, EmbeddingTable, load_word_vectors
from ..harness.dataset import LabeledRow, LabeledDataset
from ..harness.metrics import Metrics, compute_metrics
from .config import ModelConfig
from .featurize import Providers, Featurizer, EncodedSample
from .network import Swe2Network, build
from .train import Label, Prediction, EpochRecord, train, predict_logits

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


class Detector:
    """
    :param sources: where the file backed providers came from, written to the
        checkpoint so :meth:`load` can reopen them. Keys: ``word_vectors``,
        ``pron_dict``.
    """

    def __init__(
        self,
        network: Swe2Network,
        providers: Providers,
        sentiment_lexicon: SentimentLexicon,
        hate_lexicon: HateLexicon,
        pipeline: T.Optional[PipelineConfig] = None,
        sources: T.Optional[T.Dict[str, T.Optional[str]]] = None,
    ):
        self.network = network
        self.providers = providers
        self.sentiment_lexicon = sentiment_lexicon
        self.hate_lexicon = hate_lexicon
        self.pipeline = pipeline or PipelineConfig.make()
        self.sources = dict(sources or {})

    @property
    def config(self) -> ModelConfig:
        return self.network.config

    @cached_property
    def featurizer(self) -> Featurizer:
        return Featurizer(self.config, self.providers)

    # --------------------------------------------------------------------------
    # Message level
    # --------------------------------------------------------------------------
    def split(self, tokens: TokenSeq) -> TargetSplit:
        return find_target(
            tokens,
            self.sentiment_lexicon,
            self.hate_lexicon,
            message_rng(self.pipeline.seed, tokens),
            self.pipeline.tau,
        )

    def encode_tokens(self, tokens: TokenSeq, label: T.Optional[int] = None) -> EncodedSample:
        return self.featurizer.encode(self.split(tokens), label)

    def predict_tokens(self, tokens: TokenSeq) -> Prediction:
        """
        :raises EmptyMessage: if ``tokens`` is empty.
        """
        if not tokens:
            raise EmptyMessage.make("predict")
        logits = predict_logits(self.network, [self.encode_tokens(tokens)])
        return Prediction.from_logits(logits[0])

    def predict(self, raw: str) -> Prediction:
        """
        :raises EmptyMessage: if the message normalizes to no token.
        """
        return self.predict_tokens(normalize(raw))

    # --------------------------------------------------------------------------
    # Dataset level
    # --------------------------------------------------------------------------
    def encode_rows(self, rows: T.Iterable[LabeledRow]) -> T.List[EncodedSample]:
        """
        Encode the labeled rows that have at least one token.
        """
        samples, n_empty = list(), 0
        for row in rows:
            tokens = row.get_tokens()
            if not tokens:
                n_empty += 1
                continue
            samples.append(self.encode_tokens(tokens, row.label))
        if n_empty:
            logger.warning("skipped %d rows without tokens", n_empty)
        return samples

    def predict_rows(
        self,
        rows: T.Iterable[LabeledRow],
        batch_size: int = 128,
    ) -> T.List[Prediction]:
        """
        One prediction per row, order preserved. A row without any token is
        predicted legitimate with ``prob_hate = 0``.
        """
        rows = list(rows)
        samples, positions = list(), list()
        for i, row in enumerate(rows):
            tokens = row.get_tokens()
            if tokens:
                samples.append(self.encode_tokens(tokens))
                positions.append(i)
        predictions = [Prediction(label=Label.Legitimate, prob_hate=0.0)] * len(rows)
        logits = predict_logits(self.network, samples, batch_size)
        for i, row_logits in zip(positions, logits):
            predictions[i] = Prediction.from_logits(row_logits)
        return predictions

    def evaluate(self, dataset: LabeledDataset, batch_size: int = 128) -> Metrics:
        if not len(dataset):
            raise EmptyDataset.make("evaluation set")
        predictions = self.predict_rows(dataset.iter_rows(), batch_size)
        return compute_metrics([int(p.label) for p in predictions], dataset.labels)

    @classmethod
    def fit(
        cls,
        train_rows: T.Iterable[LabeledRow],
        valid_rows: T.Optional[T.Iterable[LabeledRow]],
        config: ModelConfig,
        providers: Providers,
        sentiment_lexicon: SentimentLexicon,
        hate_lexicon: HateLexicon,
        pipeline: T.Optional[PipelineConfig] = None,
        sources: T.Optional[T.Dict[str, T.Optional[str]]] = None,
        progress: bool = False,
    ) -> T.Tuple["Detector", T.List[EpochRecord]]:
        detector = cls(
            network=build(config),
            providers=providers,
            sentiment_lexicon=sentiment_lexicon,
            hate_lexicon=hate_lexicon,
            pipeline=pipeline,
            sources=sources,
        )
        train_samples = detector.encode_rows(train_rows)
        valid_samples = detector.encode_rows(valid_rows) if valid_rows is not None else None
        _, history = train(
            detector.network,
            train_samples,
            config,
            valid_samples=valid_samples,
            progress=progress,
        )
        return detector, history

    # --------------------------------------------------------------------------
    # Checkpoint
    # --------------------------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "config": self.config.to_dict(),
            "pipeline": self.pipeline.to_dict(),
            "params": {
                name: tensor.detach().cpu().tolist()
                for name, tensor in self.network.state_dict().items()
            },
            "char_table": (
                None if self.providers.char_table is None else self.providers.char_table.to_dict()
            ),
            "pho_table": (
                None if self.providers.pho_table is None else self.providers.pho_table.to_dict()
            ),
            "sentiment_lexicon": dict(sorted(self.sentiment_lexicon.entries.items())),
            "hate_lexicon": sorted(self.hate_lexicon.words),
            "sources": self.sources,
        }

    def save(self, path: T.Union[str, Path]):
        Path(path).write_text(json.dumps(self.to_dict()), encoding="utf-8")
        logger.info("saved detector to %s", path)

    @classmethod
    def from_dict(
        cls,
        data: dict,
        word_table: T.Optional[EmbeddingTable] = None,
        path: T.Optional[str] = None,
    ) -> "Detector":
        """
        :param word_table: overrides the word vector file named in the
            checkpoint. Without both, out of vocabulary hashing alone is used.
        """
        if data.get("format_version") != FORMAT_VERSION:
            raise ParseError.make(path, 1, f"unsupported format_version {data.get('format_version')!r}")
        config = ModelConfig.from_dict(data["config"])
        sources = dict(data.get("sources") or {})
        if word_table is None and config.use_lstms:
            if sources.get("word_vectors"):
                word_table = load_word_vectors(sources["word_vectors"])
            else:
                word_table = EmbeddingTable.empty(EmbeddingKind.Word, config.word_dim)
        pron_dict = load_pron_dict(sources["pron_dict"]) if sources.get("pron_dict") else None
        providers = Providers(
            word_table=word_table,
            char_table=(
                EmbeddingTable.from_dict(data["char_table"]) if data.get("char_table") else None
            ),
            pho_table=(
                EmbeddingTable.from_dict(data["pho_table"]) if data.get("pho_table") else None
            ),
            pron_dict=pron_dict,
        )
        network = build(config)
        dtype = next(network.parameters()).dtype
        state = {
            name: torch.tensor(values, dtype=dtype)
            for name, values in data["params"].items()
        }
        network.load_state_dict(state)
        network.eval()
        detector = cls(
            network=network,
            providers=providers,
            sentiment_lexicon=SentimentLexicon(entries=dict(data["sentiment_lexicon"])),
            hate_lexicon=HateLexicon(data["hate_lexicon"]),
            pipeline=PipelineConfig.from_dict(data["pipeline"]),
            sources=sources,
        )
        # fail early on a missing or mismatched table
        detector.featurizer
        return detector

    @classmethod
    def load(
        cls,
        path: T.Union[str, Path],
        word_table: T.Optional[EmbeddingTable] = None,
    ) -> "Detector":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        detector = cls.from_dict(data, word_table=word_table, path=str(path))
        logger.info("loaded detector from %s", path)
        return detector
