# -*- coding: utf-8 -*-

"""
Turn a :class:`~swe2.targetword.TargetSplit` into the network inputs:

- the character matrix and the phoneme matrix of the target word
- the word vectors of the words before the target, in reading order
- the word vectors of the words after the target, in reverse order, so the
  backward LSTM reads towards the target

An empty side is replaced by one ``<BOS>`` (before) or ``<EOS>`` (after) vector.
"""

import typing as T
import logging
import dataclasses

import numpy as np
import torch

from ..exc import ProviderMissing, ShapeMismatch, UnmappableInput
from ..targetword import TargetSplit
from ..phonetics import PronDict, ChunkTable
from ..embeddings.table import EmbeddingKind, EmbeddingTable, word_vector
from ..embeddings.subword import MIN_ROWS, embed_chars, embed_phonemes
from .config import ModelConfig

logger = logging.getLogger(__name__)

BOS = "<BOS>"
EOS = "<EOS>"


@dataclasses.dataclass
class Providers:
    """
    Everything the featurizer looks symbols up in.
    """

    word_table: T.Optional[EmbeddingTable] = None
    char_table: T.Optional[EmbeddingTable] = None
    pho_table: T.Optional[EmbeddingTable] = None
    pron_dict: T.Optional[PronDict] = None
    chunk_table: T.Optional[ChunkTable] = None


@dataclasses.dataclass
class EncodedSample:
    split: TargetSplit
    v_char: T.Optional[np.ndarray]
    v_pho: T.Optional[np.ndarray]
    u_bef: T.Optional[np.ndarray]
    u_aft: T.Optional[np.ndarray]
    label: T.Optional[int] = None


@dataclasses.dataclass
class Batch:
    """
    Zero padded network inputs of several samples, with their true lengths.
    """

    v_char: T.Optional[torch.Tensor]
    char_lengths: T.Optional[torch.Tensor]
    v_pho: T.Optional[torch.Tensor]
    pho_lengths: T.Optional[torch.Tensor]
    u_bef: T.Optional[torch.Tensor]
    bef_lengths: T.Optional[torch.Tensor]
    u_aft: T.Optional[torch.Tensor]
    aft_lengths: T.Optional[torch.Tensor]
    labels: T.Optional[torch.Tensor] = None

    @property
    def size(self) -> int:
        for tensor in [self.char_lengths, self.pho_lengths, self.bef_lengths]:
            if tensor is not None:
                return int(tensor.shape[0])
        raise ValueError("empty batch")  # pragma: no cover

    def to(self, dtype: torch.dtype) -> "Batch":
        """
        Cast the float tensors.
        """
        kwargs = dict()
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if value is not None and value.is_floating_point():
                value = value.to(dtype)
            kwargs[field.name] = value
        return Batch(**kwargs)


def _check_table(
    name: str,
    table: T.Optional[EmbeddingTable],
    kind: EmbeddingKind,
    dim: int,
):
    if table is None:
        raise ProviderMissing.make(name)
    if table.kind is not kind:
        raise ShapeMismatch.make(f"{name} kind", kind.value, table.kind.value)
    if table.dim != dim:
        raise ShapeMismatch.make(f"{name} dim", dim, table.dim)


class Featurizer:
    """
    Encode target splits for one :class:`ModelConfig`. Per word matrices are
    cached.

    :raises ProviderMissing: if a table required by the config is missing.
    :raises ShapeMismatch: if a table dimension differs from the config.
    """

    def __init__(self, config: ModelConfig, providers: Providers):
        if config.use_char:
            _check_table("char_table", providers.char_table, EmbeddingKind.Char, config.char_dim)
        if config.use_pho:
            _check_table("pho_table", providers.pho_table, EmbeddingKind.Phoneme, config.pho_dim)
        if config.use_lstms:
            _check_table("word_table", providers.word_table, EmbeddingKind.Word, config.word_dim)
        self.config = config
        self.providers = providers
        self._char_cache: T.Dict[str, np.ndarray] = dict()
        self._pho_cache: T.Dict[str, np.ndarray] = dict()

    def char_matrix(self, word: str) -> np.ndarray:
        if word not in self._char_cache:
            self._char_cache[word] = embed_chars(word, self.providers.char_table)
        return self._char_cache[word]

    def pho_matrix(self, word: str) -> np.ndarray:
        if word not in self._pho_cache:
            try:
                matrix = embed_phonemes(
                    word,
                    self.providers.pron_dict,
                    self.providers.pho_table,
                    self.providers.chunk_table,
                )
            except UnmappableInput:
                logger.debug("no phonemes for %r, using PAD rows", word)
                matrix = np.zeros((MIN_ROWS, self.config.pho_dim), dtype=np.float64)
            self._pho_cache[word] = matrix
        return self._pho_cache[word]

    def word_matrix(self, words: T.Sequence[str], empty: str) -> np.ndarray:
        table = self.providers.word_table
        if not words:
            words = [empty]
        return np.stack([word_vector(word, table) for word in words])

    def encode(self, split: TargetSplit, label: T.Optional[int] = None) -> EncodedSample:
        config = self.config
        return EncodedSample(
            split=split,
            v_char=self.char_matrix(split.target) if config.use_char else None,
            v_pho=self.pho_matrix(split.target) if config.use_pho else None,
            u_bef=self.word_matrix(split.before, BOS) if config.use_lstms else None,
            u_aft=(
                self.word_matrix(split.after[::-1], EOS) if config.use_lstms else None
            ),
            label=label,
        )


def _pad(
    matrices: T.List[np.ndarray],
    dtype: torch.dtype,
) -> T.Tuple[torch.Tensor, torch.Tensor]:
    lengths = [m.shape[0] for m in matrices]
    out = np.zeros((len(matrices), max(lengths), matrices[0].shape[1]), dtype=np.float64)
    for i, m in enumerate(matrices):
        out[i, : m.shape[0]] = m
    return torch.from_numpy(out).to(dtype), torch.tensor(lengths, dtype=torch.long)


def collate(
    samples: T.Sequence[EncodedSample],
    dtype: torch.dtype = torch.float32,
) -> Batch:
    """
    Pad samples into one :class:`Batch`. Labels are kept only if every sample
    has one.
    """
    if not samples:
        raise ValueError("cannot collate zero samples")
    kwargs = dict()
    for name, length_name in [
        ("v_char", "char_lengths"),
        ("v_pho", "pho_lengths"),
        ("u_bef", "bef_lengths"),
        ("u_aft", "aft_lengths"),
    ]:
        if getattr(samples[0], name) is None:
            kwargs[name], kwargs[length_name] = None, None
        else:
            kwargs[name], kwargs[length_name] = _pad(
                [getattr(s, name) for s in samples], dtype
            )
    if all(s.label is not None for s in samples):
        kwargs["labels"] = torch.tensor([s.label for s in samples], dtype=torch.long)
    return Batch(**kwargs)
