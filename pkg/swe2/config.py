# -*- coding: utf-8 -*-

"""
Process wide defaults, and the settings of the message level pipeline.
"""

import os
import dataclasses

from .exc import InvalidConfig

ENV_SEED = "SWE2_SEED"
DEFAULT_SEED = 1


def get_default_seed() -> int:
    """
    The global seed default, read from the ``SWE2_SEED`` environment variable.
    """
    value = os.environ.get(ENV_SEED)
    if value is None or not value.strip():
        return DEFAULT_SEED
    return int(value)


@dataclasses.dataclass(frozen=True)
class PipelineConfig:
    """
    Don't use the ``__init__`` constructor directly. Use :meth:`PipelineConfig.make`.

    :param tau: minimal absolute valence for a sentiment driven target.
    :param seed: seed of the per message random target fallback.
    :param compound_alpha: normalization constant of the compound score.
    """

    tau: float = 0.5
    seed: int = DEFAULT_SEED
    compound_alpha: float = 15.0

    @classmethod
    def make(
        cls,
        tau: float = 0.5,
        seed: int = None,
        compound_alpha: float = 15.0,
    ) -> "PipelineConfig":
        if seed is None:
            seed = get_default_seed()
        if tau < 0:
            raise InvalidConfig.make("tau", tau, "must be >= 0")
        if compound_alpha <= 0:
            raise InvalidConfig.make("compound_alpha", compound_alpha, "must be positive")
        return cls(tau=float(tau), seed=int(seed), compound_alpha=float(compound_alpha))

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineConfig":
        return cls.make(**data)
