# -*- coding: utf-8 -*-

from .dataset import LABELS
from .dataset import LabeledRow
from .dataset import LabeledRowIterProxy
from .dataset import LabeledDataset
from .dataset import load_dataset
from .dataset import save_dataset
from .dataset import split
from .dataset import downsample_ratio
from .metrics import ClassMetrics
from .metrics import Metrics
from .metrics import compute_metrics
from .synthetic import SyntheticCorpus
from .synthetic import make_synthetic_corpus
from .experiments import SWEEP_RATIOS
from .experiments import CLASS_RATIOS
from .experiments import SweepPoint
from .experiments import SweepResult
from .experiments import default_encoder
from .experiments import attacked_test_sets
from .experiments import evaluate_sweep
from .experiments import sweep_attack
from .experiments import run_ablation
from .experiments import write_ablation_csv
from .experiments import ClassRatioPoint
from .experiments import run_class_ratio
from .experiments import write_class_ratio_csv
from .analysis import HIT_BUCKETS
from .analysis import count_hits
from .analysis import lexicon_hits
from .analysis import DetectionRate
from .analysis import detection_by_hits
from .analysis import SentimentShift
from .analysis import sentiment_shift
from .analysis import mean_abs_scores
from .analysis import write_lexicon_hits_csv
from .analysis import write_detection_csv
from .analysis import write_sentiment_shift_csv
