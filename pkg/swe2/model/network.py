# -*- coding: utf-8 -*-

"""
The detector network.

- two CNNs read the character matrix (U_Char) and the phoneme matrix (U_Pho)
  of the target word
- a forward LSTM reads the words before the target (U_For), a backward LSTM
  reads the words after the target from the end (U_Bac)
- the last step of each LSTM is local context, the other steps form U_Glo
- U_Loc = U_ForLast + U_BacLast + U_Char + U_Pho (concatenation)
- U_Glo2 = attention, max and mean pooling of U_Glo
- a multi layer perceptron maps U_Glo2 + U_Loc to two logits

Every per sample result is independent of how the batch is padded.
"""

import typing as T
import math
import dataclasses

import torch
import torch.nn as nn
import torch.nn.functional as F
from torch.nn.utils.rnn import pack_padded_sequence, pad_packed_sequence

from ..exc import ProviderMissing, ShapeMismatch
from ..embeddings.subword import MIN_ROWS
from .config import ModelConfig, N_CLASSES
from .featurize import Batch

MASK_VALUE = -1e9


def _uniform_(tensor: torch.Tensor, bound: float, generator: torch.Generator):
    with torch.no_grad():
        values = torch.rand(tensor.shape, generator=generator, dtype=torch.float64)
        tensor.copy_(values * 2 * bound - bound)


def _length_mask(lengths: torch.Tensor, size: int) -> torch.Tensor:
    return torch.arange(size, device=lengths.device).unsqueeze(0) < lengths.unsqueeze(1)


class SubwordCNN(nn.Module):
    """
    1-D convolutions of several widths over a ``(B, L, D)`` matrix, ReLU, then
    max pooling over the valid windows of each sample.
    """

    def __init__(self, in_dim: int, widths: T.Sequence[int], filters: int):
        super().__init__()
        self.widths = tuple(widths)
        self.convs = nn.ModuleList([nn.Conv1d(in_dim, filters, k) for k in self.widths])

    @property
    def out_dim(self) -> int:
        return len(self.widths) * self.convs[0].out_channels

    def forward(self, x: torch.Tensor, lengths: torch.Tensor) -> torch.Tensor:
        x = x.transpose(1, 2)
        pooled = list()
        for k, conv in zip(self.widths, self.convs):
            h = F.relu(conv(x))
            n_valid = lengths.clamp(min=MIN_ROWS) - k + 1
            mask = _length_mask(n_valid, h.shape[-1])
            h = h.masked_fill(~mask.unsqueeze(1), MASK_VALUE)
            pooled.append(h.max(dim=-1).values)
        return torch.cat(pooled, dim=-1)


class AdditiveAttention(nn.Module):
    """
    ``score_t = v . tanh(W h_t + b)``, softmax over the valid rows, weighted
    sum of the rows. A sample without valid rows pools to zero.
    """

    def __init__(self, dim: int, attention_dim: T.Optional[int] = None):
        super().__init__()
        attention_dim = attention_dim or dim
        self.proj = nn.Linear(dim, attention_dim)
        self.context = nn.Linear(attention_dim, 1, bias=False)

    def forward(
        self,
        h: torch.Tensor,
        mask: torch.Tensor,
    ) -> T.Tuple[torch.Tensor, torch.Tensor]:
        scores = self.context(torch.tanh(self.proj(h))).squeeze(-1)
        scores = scores.masked_fill(~mask, MASK_VALUE)
        weights = torch.softmax(scores, dim=-1) * mask.to(h.dtype)
        pooled = (weights.unsqueeze(-1) * h).sum(dim=1)
        return pooled, weights


def masked_max(h: torch.Tensor, mask: torch.Tensor) -> torch.Tensor:
    filled = h.masked_fill(~mask.unsqueeze(-1), MASK_VALUE)
    has_any = mask.any(dim=1, keepdim=True)
    return torch.where(has_any, filled.max(dim=1).values, torch.zeros_like(filled[:, 0]))


def masked_mean(h: torch.Tensor, mask: torch.Tensor) -> torch.Tensor:
    weights = mask.to(h.dtype).unsqueeze(-1)
    return (h * weights).sum(dim=1) / weights.sum(dim=1).clamp(min=1.0)


class MultiFC(nn.Module):
    def __init__(self, in_dim: int, hidden: T.Sequence[int], dropout_rate: float):
        super().__init__()
        layers = list()
        for size in hidden:
            layers.extend([nn.Linear(in_dim, size), nn.ReLU(), nn.Dropout(dropout_rate)])
            in_dim = size
        layers.append(nn.Linear(in_dim, N_CLASSES))
        self.layers = nn.Sequential(*layers)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        return self.layers(x)


@dataclasses.dataclass
class Activations:
    """
    Intermediate tensors of one forward pass, batch first. Absent channels are
    ``None``. ``glo_mask`` marks the valid rows of ``u_glo``.
    """

    u_char: T.Optional[torch.Tensor]
    u_pho: T.Optional[torch.Tensor]
    u_bef: T.Optional[torch.Tensor]
    u_aft: T.Optional[torch.Tensor]
    u_for: T.Optional[torch.Tensor]
    u_bac: T.Optional[torch.Tensor]
    u_for_last: T.Optional[torch.Tensor]
    u_bac_last: T.Optional[torch.Tensor]
    u_for_rest: T.Optional[torch.Tensor]
    u_bac_rest: T.Optional[torch.Tensor]
    u_glo: T.Optional[torch.Tensor]
    glo_mask: T.Optional[torch.Tensor]
    attention: T.Optional[torch.Tensor]
    u_loc: torch.Tensor
    u_glo2: T.Optional[torch.Tensor]
    logits: torch.Tensor


def _run_lstm(
    lstm: nn.LSTM,
    x: torch.Tensor,
    lengths: torch.Tensor,
) -> T.Tuple[torch.Tensor, torch.Tensor, torch.Tensor, torch.Tensor]:
    """
    :return: layer 2 outputs, last step, the other steps and their mask.
    """
    packed = pack_padded_sequence(x, lengths.cpu(), batch_first=True, enforce_sorted=False)
    out, _ = lstm(packed)
    out, _ = pad_packed_sequence(out, batch_first=True, total_length=x.shape[1])
    index = torch.arange(x.shape[0], device=x.device)
    last = out[index, lengths - 1]
    rest = out[:, : out.shape[1] - 1]
    rest_mask = _length_mask(lengths - 1, rest.shape[1])
    return out, last, rest, rest_mask


class Swe2Network(nn.Module):
    def __init__(self, config: ModelConfig):
        super().__init__()
        config.validate()
        self.config = config
        widths, filters = config.cnn_kernel_widths, config.cnn_filters_per_width
        self.char_cnn = SubwordCNN(config.char_dim, widths, filters) if config.use_char else None
        self.pho_cnn = SubwordCNN(config.pho_dim, widths, filters) if config.use_pho else None
        if config.use_lstms:
            self.forward_lstm = nn.LSTM(
                config.word_dim, config.lstm_hidden, num_layers=config.lstm_layers, batch_first=True
            )
            self.backward_lstm = nn.LSTM(
                config.word_dim, config.lstm_hidden, num_layers=config.lstm_layers, batch_first=True
            )
            self.attention = AdditiveAttention(config.lstm_hidden)
        else:
            self.forward_lstm = None
            self.backward_lstm = None
            self.attention = None
        self.head = MultiFC(config.feature_dim, config.mlp_hidden, config.dropout_rate)
        self.reset_parameters()

    def reset_parameters(self):
        """
        Uniform in ``[-1/sqrt(fan_in), 1/sqrt(fan_in)]`` for every weight matrix
        and its bias, LSTM forget gate biases set to 1. Seeded by
        ``config.seed``.
        """
        generator = torch.Generator().manual_seed(self.config.seed)
        for module in self.modules():
            if isinstance(module, (nn.Linear, nn.Conv1d)):
                fan_in = module.weight[0].numel()
                bound = 1.0 / math.sqrt(fan_in)
                _uniform_(module.weight, bound, generator)
                if module.bias is not None:
                    _uniform_(module.bias, bound, generator)
            elif isinstance(module, nn.LSTM):
                hidden = module.hidden_size
                for name, param in module.named_parameters():
                    if name.startswith("weight_"):
                        _uniform_(param, 1.0 / math.sqrt(param.shape[1]), generator)
                    elif name.startswith("bias_ih"):
                        with torch.no_grad():
                            param.zero_()
                            param[hidden : 2 * hidden] = 1.0
                    elif name.startswith("bias_hh"):
                        with torch.no_grad():
                            param.zero_()

    def _check(self, name: str, tensor: T.Optional[torch.Tensor], dim: int):
        if tensor is None:
            raise ProviderMissing.make(name)
        if tensor.dim() != 3 or tensor.shape[-1] != dim:
            raise ShapeMismatch.make(name, f"(batch, rows, {dim})", tuple(tensor.shape))

    def forward(self, batch: Batch) -> Activations:
        config = self.config
        u_char = u_pho = None
        u_for = u_bac = u_for_last = u_bac_last = None
        u_for_rest = u_bac_rest = u_glo = glo_mask = attention = u_glo2 = None
        local = list()

        if config.use_lstms:
            self._check("u_bef", batch.u_bef, config.word_dim)
            self._check("u_aft", batch.u_aft, config.word_dim)
            u_for, u_for_last, u_for_rest, for_mask = _run_lstm(
                self.forward_lstm, batch.u_bef, batch.bef_lengths
            )
            u_bac, u_bac_last, u_bac_rest, bac_mask = _run_lstm(
                self.backward_lstm, batch.u_aft, batch.aft_lengths
            )
            # time axis concatenation, padded rows are masked out
            u_glo = torch.cat([u_for_rest, u_bac_rest], dim=1)
            glo_mask = torch.cat([for_mask, bac_mask], dim=1)
            if u_glo.shape[1] == 0:
                u_glo = u_glo.new_zeros((u_glo.shape[0], 1, u_glo.shape[2]))
                glo_mask = glo_mask.new_zeros((glo_mask.shape[0], 1))
            attended, attention = self.attention(u_glo, glo_mask)
            u_glo2 = torch.cat(
                [attended, masked_max(u_glo, glo_mask), masked_mean(u_glo, glo_mask)],
                dim=-1,
            )
            local.extend([u_for_last, u_bac_last])
        if config.use_char:
            self._check("v_char", batch.v_char, config.char_dim)
            u_char = self.char_cnn(batch.v_char, batch.char_lengths)
            local.append(u_char)
        if config.use_pho:
            self._check("v_pho", batch.v_pho, config.pho_dim)
            u_pho = self.pho_cnn(batch.v_pho, batch.pho_lengths)
            local.append(u_pho)

        u_loc = torch.cat(local, dim=-1)
        features = u_loc if u_glo2 is None else torch.cat([u_glo2, u_loc], dim=-1)
        logits = self.head(features)
        return Activations(
            u_char=u_char,
            u_pho=u_pho,
            u_bef=batch.u_bef,
            u_aft=batch.u_aft,
            u_for=u_for,
            u_bac=u_bac,
            u_for_last=u_for_last,
            u_bac_last=u_bac_last,
            u_for_rest=u_for_rest,
            u_bac_rest=u_bac_rest,
            u_glo=u_glo,
            glo_mask=glo_mask,
            attention=attention,
            u_loc=u_loc,
            u_glo2=u_glo2,
            logits=logits,
        )

    def features(self, batch: Batch) -> torch.Tensor:
        """
        The classifier head input, ``U_Glo2 + U_Loc``.
        """
        acts = self.forward(batch)
        if acts.u_glo2 is None:
            return acts.u_loc
        return torch.cat([acts.u_glo2, acts.u_loc], dim=-1)

    def logits(self, batch: Batch) -> torch.Tensor:
        return self.forward(batch).logits


def build(config: ModelConfig) -> Swe2Network:
    """
    A freshly initialized network.

    :raises InvalidConfig: if the config does not validate.
    """
    return Swe2Network(config)
