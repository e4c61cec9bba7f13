# -*- coding: utf-8 -*-

"""
Loss, mini-batch Adam training and batched prediction.
"""

import typing as T
import copy
import enum
import logging
import dataclasses

import numpy as np
import torch
import torch.nn.functional as F
from tqdm import tqdm
from iterproxy import IterProxy

from ..exc import EmptyDataset
from .config import ModelConfig, N_CLASSES
from .featurize import EncodedSample, Batch, collate
from .network import Swe2Network

logger = logging.getLogger(__name__)


class Label(enum.IntEnum):
    Legitimate = 0
    HateSpeech = 1


@dataclasses.dataclass(frozen=True)
class Prediction:
    label: Label
    prob_hate: float

    @classmethod
    def from_logits(cls, logits: torch.Tensor) -> "Prediction":
        probs = torch.softmax(logits.detach().double(), dim=-1)
        return cls(label=Label(int(torch.argmax(probs).item())), prob_hate=float(probs[1]))


def weighted_cross_entropy(
    logits: torch.Tensor,
    labels: T.Union[torch.Tensor, int],
    class_weights: T.Sequence[float] = (1.0, 1.0),
) -> torch.Tensor:
    """
    ``w[y] * -log softmax(logits)[y]``, averaged over the batch. A single
    ``(2,)`` logits vector with an integer label is accepted too.
    """
    if logits.dim() == 1:
        logits = logits.unsqueeze(0)
    if not torch.is_tensor(labels):
        labels = torch.tensor([int(labels)], dtype=torch.long)
    weights = torch.as_tensor(class_weights, dtype=logits.dtype)
    nll = -F.log_softmax(logits, dim=-1).gather(1, labels.view(-1, 1)).squeeze(1)
    return (weights[labels] * nll).mean()


def inverse_frequency_weights(labels: T.Iterable[int]) -> T.Tuple[float, float]:
    """
    ``1 / count(class)``, normalized so that the weights average to 1.
    """
    counts = np.bincount(np.asarray(list(labels), dtype=np.int64), minlength=N_CLASSES)
    inverse = 1.0 / np.maximum(counts, 1)
    inverse = inverse / inverse.mean()
    return float(inverse[0]), float(inverse[1])


@dataclasses.dataclass(frozen=True)
class EpochRecord:
    epoch: int
    train_loss: float
    train_accuracy: float
    valid_accuracy: T.Optional[float]


def _param_dtype(network: Swe2Network) -> torch.dtype:
    return next(network.parameters()).dtype


class BatchIterProxy(IterProxy[Batch]):
    pass


def iter_batches(
    samples: T.Sequence[EncodedSample],
    batch_size: int,
    dtype: torch.dtype,
    order: T.Optional[T.Sequence[int]] = None,
) -> BatchIterProxy:
    """
    Collated mini-batches in ``order``, lazily. ``.many(n)`` takes the next
    ``n`` batches.
    """
    if order is None:
        order = range(len(samples))
    order = list(order)
    return BatchIterProxy(
        collate([samples[i] for i in order[start : start + batch_size]], dtype=dtype)
        for start in range(0, len(order), batch_size)
    )


def predict_logits(
    network: Swe2Network,
    samples: T.Sequence[EncodedSample],
    batch_size: int = 128,
) -> torch.Tensor:
    """
    ``(n, 2)`` logits in eval mode, order preserved.
    """
    if not samples:
        return torch.zeros((0, N_CLASSES))
    dtype = _param_dtype(network)
    was_training = network.training
    network.eval()
    outputs = list()
    with torch.no_grad():
        for batch in iter_batches(samples, batch_size, dtype):
            outputs.append(network.logits(batch))
    network.train(was_training)
    return torch.cat(outputs, dim=0)


def predict(
    network: Swe2Network,
    samples: T.Sequence[EncodedSample],
    batch_size: int = 128,
) -> T.List[Prediction]:
    return [Prediction.from_logits(row) for row in predict_logits(network, samples, batch_size)]


def accuracy(network: Swe2Network, samples: T.Sequence[EncodedSample], batch_size: int = 128) -> float:
    logits = predict_logits(network, samples, batch_size)
    labels = torch.tensor([s.label for s in samples], dtype=torch.long)
    return float((logits.argmax(dim=-1) == labels).double().mean())


def train(
    network: Swe2Network,
    train_samples: T.Sequence[EncodedSample],
    config: ModelConfig,
    valid_samples: T.Optional[T.Sequence[EncodedSample]] = None,
    progress: bool = False,
) -> T.Tuple[Swe2Network, T.List[EpochRecord]]:
    """
    Mini-batch Adam on shuffled batches. When validation samples are given,
    the parameters of the epoch with the best validation accuracy (earliest on
    ties) are restored at the end.

    :raises EmptyDataset: if there is no training sample.
    """
    if not train_samples:
        raise EmptyDataset.make("training set")
    class_weights = config.class_weights
    if class_weights is None:
        class_weights = inverse_frequency_weights(s.label for s in train_samples)
    logger.info(
        "training on %d samples, class weights %.3f / %.3f",
        len(train_samples),
        *class_weights,
    )
    dtype = _param_dtype(network)
    rng = np.random.default_rng(config.seed)
    optimizer = torch.optim.Adam(
        network.parameters(),
        lr=config.learning_rate,
        betas=(0.9, 0.999),
        eps=1e-8,
    )
    history: T.List[EpochRecord] = list()
    best_state, best_accuracy, best_epoch = None, -1.0, None

    with torch.random.fork_rng(devices=[]):
        # dropout masks
        torch.manual_seed(config.seed)
        for epoch in tqdm(range(1, config.epochs + 1), desc="train", disable=not progress):
            network.train()
            total_loss, n_correct = 0.0, 0
            order = rng.permutation(len(train_samples))
            for batch in iter_batches(train_samples, config.batch_size, dtype, order):
                optimizer.zero_grad()
                logits = network.logits(batch)
                loss = weighted_cross_entropy(logits, batch.labels, class_weights)
                loss.backward()
                optimizer.step()
                total_loss += loss.item() * batch.size
                n_correct += int((logits.argmax(dim=-1) == batch.labels).sum())
            valid_accuracy = None
            if valid_samples:
                valid_accuracy = accuracy(network, valid_samples, config.batch_size)
                if valid_accuracy > best_accuracy:
                    best_accuracy, best_epoch = valid_accuracy, epoch
                    best_state = copy.deepcopy(network.state_dict())
            record = EpochRecord(
                epoch=epoch,
                train_loss=total_loss / len(train_samples),
                train_accuracy=n_correct / len(train_samples),
                valid_accuracy=valid_accuracy,
            )
            history.append(record)
            logger.info(
                "epoch %d/%d: loss %.4f, train acc %.4f, valid acc %s",
                epoch,
                config.epochs,
                record.train_loss,
                record.train_accuracy,
                "-" if valid_accuracy is None else f"{valid_accuracy:.4f}",
            )
    if best_state is not None:
        network.load_state_dict(best_state)
        logger.info("restored epoch %d, valid acc %.4f", best_epoch, best_accuracy)
    network.eval()
    return network, history
