# -*- coding: utf-8 -*-

"""
Symbol -> vector tables for the character, phoneme and word vocabularies, and
the text vector file format they are stored in::

    <count> <dim>
    <symbol> <v1> ... <vdim>
    ...
"""

import typing as T
import enum
import math
import hashlib
import logging
import dataclasses
from pathlib import Path

import numpy as np

from ..exc import ParseError, ShapeMismatch

logger = logging.getLogger(__name__)

PAD = "<PAD>"


class EmbeddingKind(str, enum.Enum):
    Char = "Char"
    Phoneme = "Phoneme"
    Word = "Word"


@dataclasses.dataclass
class EmbeddingTable:
    """
    A symbol -> vector map. The reserved :data:`PAD` symbol is always present
    and maps to the zero vector.

    :param kind: which vocabulary the table covers.
    :param dim: vector length.
    :param vectors: symbol -> float64 vector of length ``dim``.
    """

    kind: EmbeddingKind
    dim: int
    vectors: T.Dict[str, np.ndarray] = dataclasses.field(default_factory=dict)
    _oov_cache: T.Dict[str, np.ndarray] = dataclasses.field(
        default_factory=dict, repr=False, compare=False
    )

    def __post_init__(self):
        self.kind = EmbeddingKind(self.kind)
        if self.dim <= 0:
            raise ShapeMismatch.make("embedding dim", "> 0", self.dim)
        for symbol, vector in list(self.vectors.items()):
            vector = np.asarray(vector, dtype=np.float64)
            if vector.shape != (self.dim,):
                raise ShapeMismatch.make(
                    f"vector of {symbol!r}", (self.dim,), vector.shape
                )
            if not np.all(np.isfinite(vector)):
                raise ValueError(f"vector of {symbol!r} is not finite")
            self.vectors[symbol] = vector
        self.vectors[PAD] = np.zeros(self.dim, dtype=np.float64)

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.vectors

    @property
    def symbols(self) -> T.List[str]:
        return sorted(self.vectors)

    @property
    def pad_vector(self) -> np.ndarray:
        return self.vectors[PAD]

    def get(self, symbol: str) -> T.Optional[np.ndarray]:
        return self.vectors.get(symbol)

    def lookup(self, symbol: str) -> np.ndarray:
        """
        Vector of ``symbol``, the PAD vector if unknown.
        """
        return self.vectors.get(symbol, self.vectors[PAD])

    @classmethod
    def empty(cls, kind: EmbeddingKind, dim: int) -> "EmbeddingTable":
        return cls(kind=kind, dim=dim)

    # --------------------------------------------------------------------------
    # Serialization
    # --------------------------------------------------------------------------
    @classmethod
    def from_lines(
        cls,
        lines: T.Iterable[str],
        kind: EmbeddingKind = EmbeddingKind.Word,
        path: T.Optional[str] = None,
    ) -> "EmbeddingTable":
        iterator = iter(lines)
        header = next(iterator, "").split()
        if len(header) != 2:
            raise ParseError.make(path, 1, "header must be '<count> <dim>'")
        try:
            count, dim = int(header[0]), int(header[1])
        except ValueError:
            raise ParseError.make(path, 1, "header must be '<count> <dim>'")
        if count < 0 or dim <= 0:
            raise ParseError.make(path, 1, f"bad header count={count} dim={dim}")

        vectors = dict()
        n_duplicates = 0
        n_rows = 0
        for lineno, line in enumerate(iterator, start=2):
            parts = line.rstrip("\n").split(" ")
            if not line.strip():
                continue
            if len(parts) != dim + 1:
                raise ParseError.make(
                    path, lineno, f"expected 1 symbol + {dim} values, got {len(parts)} fields"
                )
            symbol = parts[0]
            try:
                values = [float(value) for value in parts[1:]]
            except ValueError:
                raise ParseError.make(path, lineno, "non numeric value")
            if not all(math.isfinite(value) for value in values):
                raise ParseError.make(path, lineno, "non finite value")
            n_rows += 1
            if symbol == PAD:
                continue
            if symbol in vectors:
                n_duplicates += 1
            vectors[symbol] = np.asarray(values, dtype=np.float64)
        if n_rows != count:
            logger.warning(
                "%s: header says %d vectors, found %d", path or "<lines>", count, n_rows
            )
        if n_duplicates:
            logger.info("%d duplicated symbols, last occurrence kept", n_duplicates)
        return cls(kind=kind, dim=dim, vectors=vectors)

    @classmethod
    def from_file(
        cls,
        path: T.Union[str, Path],
        kind: EmbeddingKind = EmbeddingKind.Word,
    ) -> "EmbeddingTable":
        path = str(path)
        with open(path, "r", encoding="utf-8") as f:
            table = cls.from_lines(f, kind=kind, path=path)
        logger.info("loaded %d %s vectors (dim=%d) from %s", len(table) - 1, table.kind.value, table.dim, path)
        return table

    def to_file(self, path: T.Union[str, Path]):
        symbols = [symbol for symbol in self.symbols if symbol != PAD]
        with open(str(path), "w", encoding="utf-8") as f:
            f.write(f"{len(symbols)} {self.dim}\n")
            for symbol in symbols:
                values = " ".join(repr(float(value)) for value in self.vectors[symbol])
                f.write(f"{symbol} {values}\n")

    save = to_file

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "dim": self.dim,
            "vectors": {
                symbol: vector.tolist()
                for symbol, vector in sorted(self.vectors.items())
                if symbol != PAD
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EmbeddingTable":
        return cls(
            kind=EmbeddingKind(data["kind"]),
            dim=int(data["dim"]),
            vectors={
                symbol: np.asarray(vector, dtype=np.float64)
                for symbol, vector in data["vectors"].items()
            },
        )


def load_word_vectors(path: T.Union[str, Path]) -> EmbeddingTable:
    """
    Load a word-level vector file (FastText ``.vec`` layout).
    """
    return EmbeddingTable.from_file(path, kind=EmbeddingKind.Word)


def hashed_unit_vector(token: str, dim: int) -> np.ndarray:
    """
    A unit-norm vector seeded by a stable hash of ``token``.
    """
    digest = hashlib.sha256(token.encode("utf-8")).digest()
    rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
    vector = rng.standard_normal(dim)
    return vector / np.linalg.norm(vector)


def word_vector(token: str, table: EmbeddingTable) -> np.ndarray:
    """
    Word vector lookup. Out of vocabulary tokens get a deterministic hashed unit
    vector, so a manipulated spelling gets a stable vector of its own.
    """
    if table.kind is not EmbeddingKind.Word:
        raise ShapeMismatch.make("embedding table kind", EmbeddingKind.Word.value, table.kind.value)
    vector = table.vectors.get(token)
    if vector is not None:
        return vector
    vector = table._oov_cache.get(token)
    if vector is None:
        vector = hashed_unit_vector(token, table.dim)
        table._oov_cache[token] = vector
    return vector
