# -*- coding: utf-8 -*-

"""
Accuracy, per class precision / recall / F1 and macro F1 of a binary
legitimate (0) vs hate speech (1) prediction.
"""

import typing as T
import dataclasses

from sklearn.metrics import confusion_matrix

from ..exc import LengthMismatch, EmptyDataset


def _ratio(numerator: int, denominator: int) -> float:
    return numerator / denominator if denominator else 0.0


@dataclasses.dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int) -> "ClassMetrics":
        return cls(
            precision=_ratio(tp, tp + fp),
            recall=_ratio(tp, tp + fn),
            f1=_ratio(2 * tp, 2 * tp + fp + fn),
            support=tp + fn,
        )


@dataclasses.dataclass(frozen=True)
class Metrics:
    """
    :param confusion: ``confusion[true][pred]`` counts.
    """

    accuracy: float
    legitimate: ClassMetrics
    hate: ClassMetrics
    macro_f1: float
    confusion: T.Tuple[T.Tuple[int, int], T.Tuple[int, int]]

    @property
    def n(self) -> int:
        return sum(sum(row) for row in self.confusion)

    @property
    def f1_leg(self) -> float:
        return self.legitimate.f1

    @property
    def f1_hate(self) -> float:
        return self.hate.f1

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "macro_f1": self.macro_f1,
            "f1_leg": self.f1_leg,
            "f1_hate": self.f1_hate,
            "precision_leg": self.legitimate.precision,
            "precision_hate": self.hate.precision,
            "recall_leg": self.legitimate.recall,
            "recall_hate": self.hate.recall,
            "confusion": [list(row) for row in self.confusion],
        }


def compute_metrics(preds: T.Sequence[int], labels: T.Sequence[int]) -> Metrics:
    """
    :raises LengthMismatch: if ``preds`` and ``labels`` differ in length.
    :raises EmptyDataset: if both are empty.
    """
    if len(preds) != len(labels):
        raise LengthMismatch.make("preds vs labels", len(preds), len(labels))
    if not len(labels):
        raise EmptyDataset.make("prediction list")
    matrix = confusion_matrix(
        [int(y) for y in labels], [int(p) for p in preds], labels=[0, 1]
    )
    (tn, fp), (fn, tp) = [[int(v) for v in row] for row in matrix]
    hate = ClassMetrics.from_counts(tp=tp, fp=fp, fn=fn)
    legitimate = ClassMetrics.from_counts(tp=tn, fp=fn, fn=fp)
    return Metrics(
        accuracy=(tp + tn) / len(labels),
        legitimate=legitimate,
        hate=hate,
        macro_f1=(legitimate.f1 + hate.f1) / 2,
        confusion=((tn, fp), (fn, tp)),
    )
