# -*- coding: utf-8 -*-

"""
Usage example::

    import swe2.api as swe2

    detector = swe2.Detector.load("model.json")
    detector.predict("@bob you are a limey")
"""

from ._version import __version__
from . import exc
from .config import ENV_SEED
from .config import get_default_seed
from .config import PipelineConfig
from .textnorm import USER
from .textnorm import URL
from .textnorm import TokenSeq
from .textnorm import is_sentinel
from .textnorm import normalize
from .textnorm import normalize_text
from .targetword import SentimentLexicon
from .targetword import HateLexicon
from .targetword import load_sentiment_lexicon
from .targetword import load_hate_lexicon
from .targetword import sentiment_score
from .targetword import compound_score
from .targetword import lcs_length
from .targetword import char_difference
from .targetword import SelectionMethod
from .targetword import TargetSplit
from .targetword import message_rng
from .targetword import find_target
from .phonetics import PHONEME_INVENTORY
from .phonetics import PronDict
from .phonetics import load_pron_dict
from .phonetics import ChunkTable
from .phonetics import load_chunk_table
from .phonetics import write_chunk_table
from .phonetics import g2p_fallback
from .phonetics import to_phonemes
from .phonetics import build_chunk_table
from .gradcheck import relative_error
from .gradcheck import max_relative_error
from .embeddings.api import EmbeddingKind
from .embeddings.api import EmbeddingTable
from .embeddings.api import load_word_vectors
from .embeddings.api import word_vector
from .embeddings.api import CbowConfig
from .embeddings.api import CbowTrainer
from .embeddings.api import train_cbow
from .embeddings.api import embed_chars
from .embeddings.api import embed_phonemes
from .embeddings.api import char_corpus
from .embeddings.api import phoneme_corpus
from .attack.api import AttackMethod
from .attack.api import ConfusionTable
from .attack.api import bug_swap
from .attack.api import bug_delete
from .attack.api import bug_subc
from .attack.api import select_victim
from .attack.api import SentenceEncoder
from .attack.api import MeanWordVectorEncoder
from .attack.api import sentence_encode
from .attack.api import AttackPlan
from .attack.api import attack_message
from .attack.api import attack_dataset
from .model.api import ModelConfig
from .model.api import ABLATIONS
from .model.api import Providers
from .model.api import Featurizer
from .model.api import Swe2Network
from .model.api import build
from .model.api import Label
from .model.api import Prediction
from .model.api import train
from .model.api import grad_check
from .model.api import grad_check_head
from .model.api import Detector
from .harness.api import LabeledRow
from .harness.api import LabeledDataset
from .harness.api import load_dataset
from .harness.api import save_dataset
from .harness.api import split
from .harness.api import downsample_ratio
from .harness.api import Metrics
from .harness.api import compute_metrics
from .harness.api import make_synthetic_corpus
from .harness.api import SweepResult
from .harness.api import sweep_attack
from .harness.api import run_ablation
from .harness.api import run_class_ratio
from .harness.api import lexicon_hits
from .harness.api import detection_by_hits
from .harness.api import sentiment_shift
