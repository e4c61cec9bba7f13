# -*- coding: utf-8 -*-

"""
Finite difference checks of the detector network gradients, in float64.
"""

import typing as T
import copy

import torch

from ..gradcheck import DEFAULT_EPSILON, DEFAULT_N_SAMPLES, max_relative_error
from .featurize import Batch
from .network import Swe2Network
from .train import weighted_cross_entropy


def _float64_copy(network: Swe2Network) -> Swe2Network:
    net = copy.deepcopy(network).double()
    net.eval()
    return net


def grad_check(
    network: Swe2Network,
    batch: Batch,
    epsilon: float = DEFAULT_EPSILON,
    n_samples: int = DEFAULT_N_SAMPLES,
    class_weights: T.Sequence[float] = (1.0, 1.0),
    seed: int = 1,
) -> float:
    """
    Max relative error between autograd and central differences over
    ``n_samples`` randomly picked parameters of the whole network. The network
    itself is left untouched.
    """
    net = _float64_copy(network)
    batch = batch.to(torch.float64)

    def loss_fn() -> torch.Tensor:
        return weighted_cross_entropy(net.logits(batch), batch.labels, class_weights)

    return max_relative_error(loss_fn, net.parameters(), n_samples, epsilon, seed)


def grad_check_head(
    network: Swe2Network,
    batch: Batch,
    epsilon: float = DEFAULT_EPSILON,
    n_samples: int = DEFAULT_N_SAMPLES,
    class_weights: T.Sequence[float] = (1.0, 1.0),
    seed: int = 1,
) -> float:
    """
    Same as :func:`grad_check`, restricted to the classifier head with the
    features frozen.
    """
    net = _float64_copy(network)
    batch = batch.to(torch.float64)
    with torch.no_grad():
        features = net.features(batch)

    def loss_fn() -> torch.Tensor:
        return weighted_cross_entropy(net.head(features), batch.labels, class_weights)

    return max_relative_error(loss_fn, net.head.parameters(), n_samples, epsilon, seed)
