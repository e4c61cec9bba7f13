# -*- coding: utf-8 -*-

from .table import PAD
from .table import EmbeddingKind
from .table import EmbeddingTable
from .table import load_word_vectors
from .table import hashed_unit_vector
from .table import word_vector
from .cbow import CbowConfig
from .cbow import CbowModel
from .cbow import CbowBatch
from .cbow import CbowTrainer
from .cbow import train_cbow
from .subword import MIN_ROWS
from .subword import embed_chars
from .subword import embed_phonemes
from .subword import char_corpus
from .subword import phoneme_corpus
