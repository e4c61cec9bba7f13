# -*- coding: utf-8 -*-

"""
Character and phoneme level views of a word: training corpora for the CBOW
trainer, and the per-word embedding matrices fed to the subword CNNs.
"""

import typing as T
import random
import logging

import numpy as np

from ..exc import ShapeMismatch, UnmappableInput, AttackError
from ..textnorm import TokenSeq, is_sentinel
from ..phonetics import PronDict, ChunkTable, to_phonemes
from ..attack.bugs import ConfusionTable, bug_subc
from .table import EmbeddingKind, EmbeddingTable

logger = logging.getLogger(__name__)

# every CNN kernel width (2, 3, 4) needs at least one window
MIN_ROWS = 4


def _stack(symbols: T.Sequence[str], table: EmbeddingTable) -> np.ndarray:
    n_rows = max(MIN_ROWS, len(symbols))
    matrix = np.zeros((n_rows, table.dim), dtype=np.float64)
    for i, symbol in enumerate(symbols):
        matrix[i] = table.lookup(symbol)
    return matrix


def embed_chars(word: str, table: EmbeddingTable) -> np.ndarray:
    """
    Character matrix of a word, one row per character, PAD rows appended up to
    :data:`MIN_ROWS`. Unknown characters get the PAD vector.
    """
    if table.kind is not EmbeddingKind.Char:
        raise ShapeMismatch.make("embedding table kind", EmbeddingKind.Char.value, table.kind.value)
    return _stack(list(word), table)


def embed_phonemes(
    word: str,
    pron_dict: T.Optional[PronDict],
    table: EmbeddingTable,
    chunk_table: T.Optional[ChunkTable] = None,
) -> np.ndarray:
    """
    Phoneme matrix of a word, see :func:`~swe2.phonetics.to_phonemes`.
    """
    if table.kind is not EmbeddingKind.Phoneme:
        raise ShapeMismatch.make("embedding table kind", EmbeddingKind.Phoneme.value, table.kind.value)
    return _stack(to_phonemes(word, pron_dict, chunk_table), table)


def _words(token_seqs: T.Iterable[TokenSeq], unique: bool) -> T.List[str]:
    words = [
        token
        for tokens in token_seqs
        for token in tokens
        if not is_sentinel(token)
    ]
    if unique:
        words = sorted(set(words))
    return words


def char_corpus(
    token_seqs: T.Iterable[TokenSeq],
    confusion: T.Optional[ConfusionTable] = None,
    seed: int = 1,
    unique: bool = False,
) -> T.List[T.List[str]]:
    """
    One character sequence per word occurrence, or per distinct word if
    ``unique``. With a confusion table, every word that holds a confusable
    character also contributes one look-alike variant, so substitute
    characters like ``@`` get trained vectors.
    """
    rng = random.Random(seed)
    corpus = list()
    for word in _words(token_seqs, unique):
        if len(word) >= 2:
            corpus.append(list(word))
        if confusion is not None:
            try:
                variant = bug_subc(word, confusion, rng)
            except AttackError:
                continue
            if len(variant) >= 2:
                corpus.append(list(variant))
    logger.debug("char corpus: %d sequences", len(corpus))
    return corpus


def phoneme_corpus(
    token_seqs: T.Iterable[TokenSeq],
    pron_dict: T.Optional[PronDict] = None,
    chunk_table: T.Optional[ChunkTable] = None,
    unique: bool = False,
) -> T.List[T.List[str]]:
    """
    One phoneme sequence per word. Words that cannot be transcribed are
    skipped.
    """
    corpus = list()
    n_unmappable = 0
    for word in _words(token_seqs, unique):
        try:
            phonemes = to_phonemes(word, pron_dict, chunk_table)
        except UnmappableInput:
            n_unmappable += 1
            continue
        if len(phonemes) >= 2:
            corpus.append(list(phonemes))
    if n_unmappable:
        logger.info("%d words had no phoneme transcription", n_unmappable)
    logger.debug("phoneme corpus: %d sequences", len(corpus))
    return corpus
