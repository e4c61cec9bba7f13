# -*- coding: utf-8 -*-

"""
Labeled message datasets, stored as ``label<TAB>text`` TSV files without a
header. Label ``0`` is a legitimate message, ``1`` is hate speech.
"""

import typing as T
import logging
import dataclasses
from pathlib import Path

import numpy as np
from iterproxy import IterProxy

from ..exc import ParseError, TooSmall, Unachievable, InvalidConfig
from ..textnorm import TokenSeq, normalize

if T.TYPE_CHECKING:  # pragma: no cover
    from ..attack.impl import AttackPlan

logger = logging.getLogger(__name__)

LABELS = (0, 1)
MIN_SPLIT_SIZE = 10
TRAIN_FRACTION = 0.8
VALID_FRACTION = 0.1


@dataclasses.dataclass(frozen=True)
class LabeledRow:
    """
    :param tokens: normalized tokens, when they must not be recomputed from
        ``text``. Attacked rows carry look-alike characters that normalization
        would strip.
    :param plan: the manipulation applied to this row, if any.
    """

    text: str
    label: int
    tokens: T.Optional[T.Tuple[str, ...]] = None
    plan: T.Optional["AttackPlan"] = None

    def get_tokens(self) -> TokenSeq:
        if self.tokens is not None:
            return list(self.tokens)
        return normalize(self.text)

    def with_tokens(
        self,
        tokens: T.Sequence[str],
        plan: T.Optional["AttackPlan"] = None,
    ) -> "LabeledRow":
        return LabeledRow(
            text=" ".join(tokens), label=self.label, tokens=tuple(tokens), plan=plan
        )


class LabeledRowIterProxy(IterProxy[LabeledRow]):
    pass


@dataclasses.dataclass
class LabeledDataset:
    rows: T.List[LabeledRow] = dataclasses.field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> T.Iterator[LabeledRow]:
        return iter(self.rows)

    def __getitem__(self, index: int) -> LabeledRow:
        return self.rows[index]

    @property
    def labels(self) -> T.List[int]:
        return [row.label for row in self.rows]

    def token_seqs(self) -> T.List[TokenSeq]:
        return [row.get_tokens() for row in self.rows]

    def class_counts(self) -> T.Dict[int, int]:
        counts = {label: 0 for label in LABELS}
        for row in self.rows:
            counts[row.label] += 1
        return counts

    def by_label(self, label: int) -> T.List[int]:
        """
        Row indices of one class, in order.
        """
        return [i for i, row in enumerate(self.rows) if row.label == label]

    def subset(self, indices: T.Iterable[int]) -> "LabeledDataset":
        return LabeledDataset(rows=[self.rows[i] for i in indices])

    def iter_rows(self) -> LabeledRowIterProxy:
        """
        Usage example::

            proxy = dataset.iter_rows()
            first_batch = proxy.many(128)
            rest = proxy.all()
        """
        return LabeledRowIterProxy(iter(self.rows))


def load_dataset(
    path: T.Union[str, Path],
    pretokenized: bool = False,
) -> LabeledDataset:
    """
    Read a ``label<TAB>text`` TSV. Blank lines are skipped.

    :param pretokenized: the text column is already space joined tokens (e.g.
        an attacked test set), don't normalize it again.
    :raises ParseError: on a missing tab or a label other than 0 / 1.
    """
    path = str(path)
    rows = list()
    with open(path, "r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            if "\t" not in line:
                raise ParseError.make(path, lineno, "expected label<TAB>text")
            label, text = line.split("\t", 1)
            if label.strip() not in ("0", "1"):
                raise ParseError.make(path, lineno, f"label must be 0 or 1, got {label!r}")
            tokens = tuple(text.split()) if pretokenized else None
            rows.append(LabeledRow(text=text, label=int(label), tokens=tokens))
    logger.info("loaded %d rows from %s", len(rows), path)
    return LabeledDataset(rows=rows)


def save_dataset(dataset: LabeledDataset, path: T.Union[str, Path]):
    """
    Write a ``label<TAB>text`` TSV of the space joined normalized tokens of
    every row, read it back with ``pretokenized=True``.
    """
    with open(str(path), "w", encoding="utf-8") as f:
        for row in dataset:
            text = " ".join(row.get_tokens())
            f.write(f"{row.label}\t{text}\n")


def split(
    dataset: LabeledDataset,
    seed: int,
) -> T.Tuple[LabeledDataset, LabeledDataset, LabeledDataset]:
    """
    Stratified random 80 / 10 / 10 train / valid / test partition. Each part
    keeps the original row order.

    :raises TooSmall: below 10 rows.
    """
    if len(dataset) < MIN_SPLIT_SIZE:
        raise TooSmall.make(len(dataset), MIN_SPLIT_SIZE)
    rng = np.random.default_rng(seed)
    parts = ([], [], [])
    for label in LABELS:
        indices = dataset.by_label(label)
        n = len(indices)
        shuffled = [indices[i] for i in rng.permutation(n)]
        n_train = int(round(TRAIN_FRACTION * n))
        n_valid = min(int(round(VALID_FRACTION * n)), n - n_train)
        parts[0].extend(shuffled[:n_train])
        parts[1].extend(shuffled[n_train : n_train + n_valid])
        parts[2].extend(shuffled[n_train + n_valid :])
    train, valid, test = (dataset.subset(sorted(part)) for part in parts)
    logger.info("split %d rows into %d / %d / %d", len(dataset), len(train), len(valid), len(test))
    return train, valid, test


def downsample_ratio(
    dataset: LabeledDataset,
    legit_per_hate: int,
    seed: int,
) -> LabeledDataset:
    """
    Keep every hate speech row and a random ``legit_per_hate * n_hate`` subset
    of the legitimate rows, original order preserved.

    :raises Unachievable: if there are not enough legitimate rows.
    """
    if legit_per_hate <= 0:
        raise InvalidConfig.make("legit_per_hate", legit_per_hate, "must be positive")
    hate = dataset.by_label(1)
    legit = dataset.by_label(0)
    need = legit_per_hate * len(hate)
    if need > len(legit):
        raise Unachievable.make(legit_per_hate, len(hate), len(legit))
    if need == len(legit):
        return dataset.subset(range(len(dataset)))
    rng = np.random.default_rng(seed)
    kept = [legit[i] for i in rng.choice(len(legit), size=need, replace=False)]
    return dataset.subset(sorted(hate + kept))
