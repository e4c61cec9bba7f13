# -*- coding: utf-8 -*-

"""
Architecture and training hyper parameters of the detector network.
"""

import typing as T
import json
import dataclasses
from pathlib import Path

from ..exc import InvalidConfig
from ..config import get_default_seed

N_CLASSES = 2


@dataclasses.dataclass(frozen=True)
class ModelConfig:
    """
    Don't use the ``__init__`` constructor directly. Use :meth:`ModelConfig.make`.

    :param class_weights: per class loss weight ``(legitimate, hate)``. ``None``
        means inverse class frequency of the training set, normalized to mean 1.
    :param ablate_char: drop the character CNN channel.
    :param ablate_pho: drop the phoneme CNN channel.
    :param ablate_lstms: drop both LSTMs, classify from the subword channels only.
    """

    char_dim: int = 20
    pho_dim: int = 20
    word_dim: int = 50
    cnn_kernel_widths: T.Tuple[int, ...] = (2, 3, 4)
    cnn_filters_per_width: int = 16
    lstm_hidden: int = 64
    lstm_layers: int = 2
    mlp_hidden: T.Tuple[int, ...] = (128, 64)
    dropout_rate: float = 0.3
    batch_size: int = 128
    learning_rate: float = 0.001
    epochs: int = 10
    class_weights: T.Optional[T.Tuple[float, float]] = None
    seed: int = 1
    ablate_char: bool = False
    ablate_pho: bool = False
    ablate_lstms: bool = False

    @classmethod
    def make(cls, **kwargs) -> "ModelConfig":
        """
        Build and validate a config. Keyword arguments are the field names,
        ``seed`` defaults to ``$SWE2_SEED``.

        :raises InvalidConfig: on any invalid field.
        """
        unknown = set(kwargs) - {f.name for f in dataclasses.fields(cls)}
        if unknown:
            raise InvalidConfig.make(sorted(unknown)[0], kwargs[sorted(unknown)[0]], "unknown field")
        if kwargs.get("seed") is None:
            kwargs["seed"] = get_default_seed()
        for key in ["cnn_kernel_widths", "mlp_hidden", "class_weights"]:
            if kwargs.get(key) is not None:
                kwargs[key] = tuple(kwargs[key])
        config = cls(**kwargs)
        config.validate()
        return config

    def validate(self):
        for field in [
            "char_dim",
            "pho_dim",
            "word_dim",
            "cnn_filters_per_width",
            "lstm_hidden",
            "lstm_layers",
            "batch_size",
            "epochs",
        ]:
            value = getattr(self, field)
            if not isinstance(value, int) or value <= 0:
                raise InvalidConfig.make(field, value, "must be a positive integer")
        if not self.cnn_kernel_widths or any(
            (k <= 0 or k > 4) for k in self.cnn_kernel_widths
        ):
            raise InvalidConfig.make(
                "cnn_kernel_widths", self.cnn_kernel_widths, "widths must be in 1..4"
            )
        if any(n <= 0 for n in self.mlp_hidden):
            raise InvalidConfig.make("mlp_hidden", self.mlp_hidden, "must be positive")
        if not (0 <= self.dropout_rate < 1):
            raise InvalidConfig.make("dropout_rate", self.dropout_rate, "must be in [0, 1)")
        if self.learning_rate < 0:
            raise InvalidConfig.make("learning_rate", self.learning_rate, "must be >= 0")
        if self.class_weights is not None:
            if len(self.class_weights) != N_CLASSES or any(
                w <= 0 for w in self.class_weights
            ):
                raise InvalidConfig.make(
                    "class_weights", self.class_weights, "need 2 positive weights"
                )
        if self.ablate_char and self.ablate_pho and self.ablate_lstms:
            raise InvalidConfig.make("ablate_*", True, "every channel is ablated")

    # --------------------------------------------------------------------------
    # Dimensions
    # --------------------------------------------------------------------------
    @property
    def use_char(self) -> bool:
        return not self.ablate_char

    @property
    def use_pho(self) -> bool:
        return not self.ablate_pho

    @property
    def use_lstms(self) -> bool:
        return not self.ablate_lstms

    @property
    def cnn_out_dim(self) -> int:
        return len(self.cnn_kernel_widths) * self.cnn_filters_per_width

    @property
    def u_loc_dim(self) -> int:
        dim = 2 * self.lstm_hidden if self.use_lstms else 0
        if self.use_char:
            dim += self.cnn_out_dim
        if self.use_pho:
            dim += self.cnn_out_dim
        return dim

    @property
    def u_glo2_dim(self) -> int:
        # attention, max and mean pooling of U_Glo
        return 3 * self.lstm_hidden if self.use_lstms else 0

    @property
    def feature_dim(self) -> int:
        return self.u_glo2_dim + self.u_loc_dim

    # --------------------------------------------------------------------------
    # Serialization
    # --------------------------------------------------------------------------
    def to_dict(self) -> dict:
        data = dataclasses.asdict(self)
        for key in ["cnn_kernel_widths", "mlp_hidden", "class_weights"]:
            if data[key] is not None:
                data[key] = list(data[key])
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "ModelConfig":
        return cls.make(**data)

    @classmethod
    def from_json_file(cls, path: T.Union[str, Path]) -> "ModelConfig":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))

    def with_ablation(self, name: str) -> "ModelConfig":
        """
        A copy of this config with the switches of a named ablation, see
        :data:`ABLATIONS`.
        """
        if name not in ABLATIONS:
            raise InvalidConfig.make("ablation", name, f"must be one of {list(ABLATIONS)}")
        switches = dict(ablate_char=False, ablate_pho=False, ablate_lstms=False)
        switches.update(ABLATIONS[name])
        config = dataclasses.replace(self, **switches)
        config.validate()
        return config


ABLATIONS: T.Dict[str, T.Dict[str, bool]] = {
    "full": {},
    "-Char": {"ablate_char": True},
    "-Pho": {"ablate_pho": True},
    "-Char&Pho": {"ablate_char": True, "ablate_pho": True},
    "-LSTMs": {"ablate_lstms": True},
}
