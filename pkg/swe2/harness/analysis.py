# -*- coding: utf-8 -*-

"""
Post hoc analyses: how many lexicon words a message holds, how detection
depends on it, and how manipulation shifts the message sentiment.
"""

import typing as T
import csv
import dataclasses
from pathlib import Path

from ..exc import LengthMismatch
from ..targetword import (
    DEFAULT_COMPOUND_ALPHA,
    SentimentLexicon,
    HateLexicon,
    compound_score,
)
from .dataset import LABELS, LabeledDataset

HIT_BUCKETS = ("0", "1", ">=2")


def count_hits(tokens: T.Iterable[str], hate_lexicon: HateLexicon) -> int:
    return sum(1 for token in tokens if token in hate_lexicon)


def hit_bucket(n_hits: int) -> str:
    return HIT_BUCKETS[min(n_hits, 2)]


def lexicon_hits(
    dataset: LabeledDataset,
    hate_lexicon: HateLexicon,
) -> T.Dict[int, T.Dict[str, int]]:
    """
    ``{label: {bucket: n_messages}}`` for the buckets 0, 1 and >=2 exact
    lexicon hits.
    """
    histogram = {label: {bucket: 0 for bucket in HIT_BUCKETS} for label in LABELS}
    for row in dataset:
        histogram[row.label][hit_bucket(count_hits(row.get_tokens(), hate_lexicon))] += 1
    return histogram


@dataclasses.dataclass(frozen=True)
class DetectionRate:
    n_messages: int
    n_detected: int

    @property
    def rate(self) -> float:
        return self.n_detected / self.n_messages if self.n_messages else 0.0


def detection_by_hits(
    dataset: LabeledDataset,
    predictions: T.Sequence[int],
    hate_lexicon: HateLexicon,
) -> T.Dict[str, DetectionRate]:
    """
    Share of hate speech messages predicted as hate speech, per lexicon hit
    bucket.

    :param predictions: predicted label of every row.
    """
    if len(predictions) != len(dataset):
        raise LengthMismatch.make("predictions vs dataset", len(predictions), len(dataset))
    counts = {bucket: [0, 0] for bucket in HIT_BUCKETS}
    for row, pred in zip(dataset, predictions):
        if row.label != 1:
            continue
        bucket = hit_bucket(count_hits(row.get_tokens(), hate_lexicon))
        counts[bucket][0] += 1
        counts[bucket][1] += int(int(pred) == 1)
    return {
        bucket: DetectionRate(n_messages=n, n_detected=detected)
        for bucket, (n, detected) in counts.items()
    }


@dataclasses.dataclass(frozen=True)
class SentimentShift:
    label: int
    score_before: float
    score_after: float
    manipulated: bool


def sentiment_shift(
    dataset: LabeledDataset,
    attacked: LabeledDataset,
    sentiment_lexicon: SentimentLexicon,
    alpha: float = DEFAULT_COMPOUND_ALPHA,
) -> T.List[SentimentShift]:
    """
    Compound sentiment score of every message before and after manipulation.

    :param attacked: the output of :func:`~swe2.attack.impl.attack_dataset`
        on ``dataset``, aligned row for row.
    """
    if len(dataset) != len(attacked):
        raise LengthMismatch.make("dataset vs attacked dataset", len(dataset), len(attacked))
    shifts = list()
    for before, after in zip(dataset, attacked):
        shifts.append(
            SentimentShift(
                label=before.label,
                score_before=compound_score(before.get_tokens(), sentiment_lexicon, alpha),
                score_after=compound_score(after.get_tokens(), sentiment_lexicon, alpha),
                manipulated=after.plan is not None and not after.plan.is_empty,
            )
        )
    return shifts


def mean_abs_scores(
    shifts: T.Iterable[SentimentShift],
    label: int,
    manipulated_only: bool = False,
) -> T.Tuple[float, float]:
    """
    Mean ``|score|`` before and after, over the rows of one class.
    """
    selected = [
        s for s in shifts if s.label == label and (s.manipulated or not manipulated_only)
    ]
    if not selected:
        return 0.0, 0.0
    before = sum(abs(s.score_before) for s in selected) / len(selected)
    after = sum(abs(s.score_after) for s in selected) / len(selected)
    return before, after


# ------------------------------------------------------------------------------
# CSV
# ------------------------------------------------------------------------------
def write_lexicon_hits_csv(histogram: T.Dict[int, T.Dict[str, int]], path: T.Union[str, Path]):
    with open(str(path), "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["label", "hits", "n_messages"])
        for label in LABELS:
            for bucket in HIT_BUCKETS:
                writer.writerow([label, bucket, histogram[label][bucket]])


def write_detection_csv(rates: T.Dict[str, DetectionRate], path: T.Union[str, Path]):
    with open(str(path), "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["hits", "n_messages", "n_detected", "rate"])
        for bucket in HIT_BUCKETS:
            rate = rates[bucket]
            writer.writerow([bucket, rate.n_messages, rate.n_detected, f"{rate.rate:.6f}"])


def write_sentiment_shift_csv(shifts: T.Iterable[SentimentShift], path: T.Union[str, Path]):
    with open(str(path), "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["label", "score_before", "score_after"])
        for s in shifts:
            writer.writerow([s.label, f"{s.score_before:.6f}", f"{s.score_after:.6f}"])
