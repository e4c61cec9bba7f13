# -*- coding: utf-8 -*-

"""
Central finite difference gradient check for any torch loss.
"""

import typing as T

import numpy as np
import torch

DEFAULT_EPSILON = 1e-5
DEFAULT_N_SAMPLES = 200
GRAD_FLOOR = 1e-3


def relative_error(analytic: float, numeric: float) -> float:
    """
    ``|a - n| / max(|a|, |n|, GRAD_FLOOR)``.

    Below ``GRAD_FLOOR`` the error is absolute. A central difference with
    ``eps = 1e-5`` in float64 is off by roughly ``1e-10`` in absolute terms,
    and the network has many gradients of that size or smaller (masked
    padding rows, saturated gates). A pure relative error would report those
    as failures. A backward bug on a gradient of size ``g`` below the floor
    reports about ``g / GRAD_FLOOR``, so with a ``1e-3`` threshold only bugs on
    gradients smaller than ``1e-6`` go unnoticed.
    """
    denominator = max(abs(analytic), abs(numeric), GRAD_FLOOR)
    return abs(analytic - numeric) / denominator


def max_relative_error(
    loss_fn: T.Callable[[], torch.Tensor],
    parameters: T.Iterable[torch.nn.Parameter],
    n_samples: int = DEFAULT_N_SAMPLES,
    epsilon: float = DEFAULT_EPSILON,
    seed: int = 1,
) -> float:
    """
    Compare the autograd gradient of ``loss_fn()`` with
    ``(f(p + eps) - f(p - eps)) / (2 * eps)`` on a random subsample of scalar
    parameters, and return the worst relative error.

    ``loss_fn`` must be deterministic: call it in eval mode, in float64.
    """
    params = [p for p in parameters if p.requires_grad]
    for p in params:
        p.grad = None
    loss_fn().backward()
    analytic = [
        torch.zeros_like(p) if p.grad is None else p.grad.detach().clone()
        for p in params
    ]

    sizes = [p.numel() for p in params]
    offsets = np.cumsum([0] + sizes)
    total = int(offsets[-1])
    rng = np.random.default_rng(seed)
    picks = np.sort(rng.choice(total, size=min(n_samples, total), replace=False))

    worst = 0.0
    with torch.no_grad():
        for flat in picks:
            ith = int(np.searchsorted(offsets, flat, side="right") - 1)
            index = int(flat - offsets[ith])
            view = params[ith].data.view(-1)
            original = view[index].item()
            view[index] = original + epsilon
            plus = loss_fn().item()
            view[index] = original - epsilon
            minus = loss_fn().item()
            view[index] = original
            numeric = (plus - minus) / (2 * epsilon)
            error = relative_error(analytic[ith].view(-1)[index].item(), numeric)
            worst = max(worst, error)
    return worst
