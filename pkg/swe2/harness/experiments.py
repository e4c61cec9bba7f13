# -*- coding: utf-8 -*-

"""
Robustness and data experiments on a trained or trainable detector.

- :func:`sweep_attack`: accuracy and F1 as the share of manipulated test
  messages grows from 0% to 100%.
- :func:`run_ablation`: the same sweep for each named ablation variant.
- :func:`run_class_ratio`: train and test at legitimate / hate ratios 1:1 to 5:1.

Every result writes a CSV file; figures are drawn from those files by
``scripts/plot_sweep.py``.
"""

import typing as T
import csv
import logging
import dataclasses
from pathlib import Path

from tqdm import tqdm

from ..exc import InvalidConfig
from ..config import PipelineConfig
from ..targetword import SentimentLexicon, HateLexicon
from ..embeddings.table import EmbeddingKind, EmbeddingTable
from ..attack.bugs import ConfusionTable
from ..attack.impl import SentenceEncoder, MeanWordVectorEncoder, attack_dataset
from ..model.config import ModelConfig, ABLATIONS
from ..model.featurize import Providers
from ..model.detector import Detector
from .dataset import LabeledDataset, split, downsample_ratio
from .metrics import Metrics

logger = logging.getLogger(__name__)

SWEEP_RATIOS: T.Tuple[float, ...] = tuple(round(0.1 * i, 1) for i in range(11))
CLASS_RATIOS: T.Tuple[int, ...] = (1, 2, 3, 4, 5)
METRIC_COLUMNS = ["accuracy", "macro_f1", "f1_leg", "f1_hate"]


def _metric_cells(metrics: Metrics) -> T.List[str]:
    return [f"{getattr(metrics, name):.6f}" for name in METRIC_COLUMNS]


# ------------------------------------------------------------------------------
# Attack ratio sweep
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class SweepPoint:
    ratio: float
    metrics: Metrics


@dataclasses.dataclass(frozen=True)
class SweepResult:
    """
    :param points: one point per attack ratio, ratios strictly increasing.
    """

    points: T.Tuple[SweepPoint, ...]

    def __post_init__(self):
        ratios = [point.ratio for point in self.points]
        if any(b <= a for a, b in zip(ratios, ratios[1:])):
            raise InvalidConfig.make("ratios", ratios, "must be strictly increasing")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def ratios(self) -> T.List[float]:
        return [point.ratio for point in self.points]

    def at(self, ratio: float) -> Metrics:
        for point in self.points:
            if abs(point.ratio - ratio) < 1e-9:
                return point.metrics
        raise KeyError(ratio)

    def to_rows(self) -> T.List[T.List[str]]:
        return [[f"{p.ratio:.1f}"] + _metric_cells(p.metrics) for p in self.points]

    def to_csv(self, path: T.Union[str, Path]):
        with open(str(path), "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["ratio"] + METRIC_COLUMNS)
            writer.writerows(self.to_rows())

    def summary(self) -> str:
        lines = ["ratio  accuracy  macro_f1  f1_leg  f1_hate"]
        for p in self.points:
            m = p.metrics
            lines.append(
                f"{p.ratio:5.1f}  {m.accuracy:8.4f}  {m.macro_f1:8.4f}  "
                f"{m.f1_leg:6.4f}  {m.f1_hate:7.4f}"
            )
        return "\n".join(lines)


def default_encoder(providers: Providers, word_dim: int) -> SentenceEncoder:
    """
    Mean word vector encoder over the provider word table, or over hashed
    vectors alone when there is no word table.
    """
    word_table = providers.word_table
    if word_table is None:
        word_table = EmbeddingTable.empty(EmbeddingKind.Word, word_dim)
    return MeanWordVectorEncoder(word_table)


def attacked_test_sets(
    test: LabeledDataset,
    hate_lexicon: HateLexicon,
    confusion: ConfusionTable,
    encoder: SentenceEncoder,
    seed: int,
    ratios: T.Sequence[float] = SWEEP_RATIOS,
    classes: T.Optional[T.Collection[int]] = None,
) -> T.List[T.Tuple[float, LabeledDataset]]:
    """
    The test set manipulated at every ratio. The manipulation does not depend
    on the detector, so several detectors can share these sets.
    """
    return [
        (
            ratio,
            attack_dataset(
                test,
                ratio,
                hate_lexicon,
                confusion,
                encoder,
                seed,
                classes=classes,
            ),
        )
        for ratio in ratios
    ]


def evaluate_sweep(
    detector: Detector,
    attacked: T.Sequence[T.Tuple[float, LabeledDataset]],
    progress: bool = False,
) -> SweepResult:
    points = list()
    for ratio, dataset in tqdm(attacked, desc="sweep", disable=not progress):
        metrics = detector.evaluate(dataset)
        logger.info(
            "ratio %.1f: accuracy %.4f, macro F1 %.4f",
            ratio,
            metrics.accuracy,
            metrics.macro_f1,
        )
        points.append(SweepPoint(ratio=ratio, metrics=metrics))
    return SweepResult(points=tuple(points))


def sweep_attack(
    detector: Detector,
    test: LabeledDataset,
    confusion: ConfusionTable,
    seed: int,
    hate_lexicon: T.Optional[HateLexicon] = None,
    encoder: T.Optional[SentenceEncoder] = None,
    ratios: T.Sequence[float] = SWEEP_RATIOS,
    classes: T.Optional[T.Collection[int]] = None,
    progress: bool = False,
) -> SweepResult:
    """
    Manipulate the test set at each ratio and evaluate the detector on it.

    :param hate_lexicon: victim selection lexicon, the detector's by default.
    :param encoder: sentence encoder ranking the candidates, the mean of the
        detector's word vectors by default.
    """
    if hate_lexicon is None:
        hate_lexicon = detector.hate_lexicon
    if encoder is None:
        encoder = default_encoder(detector.providers, detector.config.word_dim)
    attacked = attacked_test_sets(
        test, hate_lexicon, confusion, encoder, seed, ratios=ratios, classes=classes
    )
    return evaluate_sweep(detector, attacked, progress=progress)


# ------------------------------------------------------------------------------
# Ablation study
# ------------------------------------------------------------------------------
def run_ablation(
    train: LabeledDataset,
    valid: LabeledDataset,
    test: LabeledDataset,
    base_config: ModelConfig,
    providers: Providers,
    sentiment_lexicon: SentimentLexicon,
    hate_lexicon: HateLexicon,
    confusion: ConfusionTable,
    seed: int,
    variants: T.Sequence[str] = tuple(ABLATIONS),
    ratios: T.Sequence[float] = SWEEP_RATIOS,
    encoder: T.Optional[SentenceEncoder] = None,
    pipeline: T.Optional[PipelineConfig] = None,
    classes: T.Optional[T.Collection[int]] = None,
    progress: bool = False,
) -> T.Dict[str, SweepResult]:
    """
    Train every named variant of ``base_config`` on the same data and sweep
    it over the same manipulated test sets.

    :return: variant name -> sweep result, in ``variants`` order.
    """
    for name in variants:
        if name not in ABLATIONS:
            raise InvalidConfig.make("ablation", name, f"must be one of {list(ABLATIONS)}")
    if encoder is None:
        encoder = default_encoder(providers, base_config.word_dim)
    attacked = attacked_test_sets(
        test, hate_lexicon, confusion, encoder, seed, ratios=ratios, classes=classes
    )
    results = dict()
    for name in variants:
        logger.info("ablation variant %s", name)
        detector, _ = Detector.fit(
            train,
            valid,
            base_config.with_ablation(name),
            providers,
            sentiment_lexicon,
            hate_lexicon,
            pipeline=pipeline,
            progress=progress,
        )
        results[name] = evaluate_sweep(detector, attacked, progress=progress)
    return results


def write_ablation_csv(results: T.Dict[str, SweepResult], path: T.Union[str, Path]):
    with open(str(path), "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["variant", "ratio"] + METRIC_COLUMNS)
        for name, result in results.items():
            for row in result.to_rows():
                writer.writerow([name] + row)


# ------------------------------------------------------------------------------
# Class ratio study
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ClassRatioPoint:
    legit_per_hate: int
    n_rows: int
    metrics: Metrics


def run_class_ratio(
    dataset: LabeledDataset,
    base_config: ModelConfig,
    providers: Providers,
    sentiment_lexicon: SentimentLexicon,
    hate_lexicon: HateLexicon,
    seed: int,
    ratios: T.Sequence[int] = CLASS_RATIOS,
    pipeline: T.Optional[PipelineConfig] = None,
    progress: bool = False,
) -> T.List[ClassRatioPoint]:
    """
    For each ratio: downsample the legitimate rows, split 80 / 10 / 10, train
    with inverse class frequency weights and evaluate on the test part.

    :raises Unachievable: if a ratio needs more legitimate rows than exist.
    """
    config = dataclasses.replace(base_config, class_weights=None)
    points = list()
    for legit_per_hate in ratios:
        sampled = downsample_ratio(dataset, legit_per_hate, seed)
        train, valid, test = split(sampled, seed)
        detector, _ = Detector.fit(
            train,
            valid,
            config,
            providers,
            sentiment_lexicon,
            hate_lexicon,
            pipeline=pipeline,
            progress=progress,
        )
        metrics = detector.evaluate(test)
        logger.info(
            "ratio %d:1 (%d rows): accuracy %.4f, macro F1 %.4f",
            legit_per_hate,
            len(sampled),
            metrics.accuracy,
            metrics.macro_f1,
        )
        points.append(
            ClassRatioPoint(legit_per_hate=legit_per_hate, n_rows=len(sampled), metrics=metrics)
        )
    return points


def write_class_ratio_csv(points: T.Iterable[ClassRatioPoint], path: T.Union[str, Path]):
    with open(str(path), "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["legit_per_hate", "n_rows"] + METRIC_COLUMNS)
        for point in points:
            writer.writerow([point.legit_per_hate, point.n_rows] + _metric_cells(point.metrics))
