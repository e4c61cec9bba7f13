# -*- coding: utf-8 -*-

"""
All errors raised by ``swe2``. Every error derives from :class:`Swe2Error`, and
every concrete error has a ``make(...)`` factory that renders the message.
"""

import typing as T


class Swe2Error(Exception):
    """
    The base class for all errors raised by ``swe2``.
    """


# ------------------------------------------------------------------------------
# Input / file format
# ------------------------------------------------------------------------------
class ParseError(Swe2Error, ValueError):
    """
    Raised when a data file (lexicon, dictionary, vectors, dataset) has a
    malformed line.

    :param path: the file being parsed, ``None`` for in-memory lines.
    :param line: 1-based line number.
    """

    def __init__(
        self,
        message: str,
        path: T.Optional[str] = None,
        line: T.Optional[int] = None,
    ):
        super().__init__(message)
        self.path = path
        self.line = line

    @classmethod
    def make(cls, path: T.Optional[str], line: int, reason: str):
        where = f"{path}:{line}" if path else f"line {line}"
        return cls(f"{where}: {reason}", path=path, line=line)


class LengthMismatch(Swe2Error, ValueError):
    """
    Raised when two sequences that must be aligned have different lengths.
    """

    @classmethod
    def make(cls, what: str, left: int, right: int):
        return cls(f"{what}: length mismatch, {left} != {right}")


class EmptyMessage(Swe2Error):
    """
    Raised when a message normalizes to zero tokens but an operation needs at
    least one.
    """

    @classmethod
    def make(cls, operation: str):
        return cls(f"{operation} requires a non-empty token sequence")


# ------------------------------------------------------------------------------
# Phonetics
# ------------------------------------------------------------------------------
class UnmappableInput(Swe2Error):
    """
    Raised when a word has no character the grapheme-to-phoneme table can map.
    """

    @classmethod
    def make(cls, word: str):
        return cls(f"word {word!r} contains no mappable character")


# ------------------------------------------------------------------------------
# Embeddings / model
# ------------------------------------------------------------------------------
class EmptyCorpus(Swe2Error):
    """
    Raised when CBOW training gets no usable sequence (length >= 2).
    """

    @classmethod
    def make(cls, n_sequences: int):
        return cls(
            f"corpus has no sequence of length >= 2 "
            f"(got {n_sequences} sequences)"
        )


class InvalidConfig(Swe2Error, ValueError):
    """
    Raised when a configuration object fails validation.
    """

    @classmethod
    def make(cls, field: str, value: T.Any, reason: str):
        return cls(f"invalid config {field}={value!r}: {reason}")


class ProviderMissing(Swe2Error):
    """
    Raised when the network needs an embedding provider that was not supplied.
    """

    @classmethod
    def make(cls, provider: str):
        return cls(
            f"{provider} is required by the model config but was not provided"
        )


class ShapeMismatch(Swe2Error):
    """
    Raised when an input tensor or table does not match the model config.
    """

    @classmethod
    def make(cls, what: str, expected: T.Any, got: T.Any):
        return cls(f"{what}: expected {expected}, got {got}")


class EmptyDataset(Swe2Error):
    """
    Raised when training or evaluation is asked to run on zero rows.
    """

    @classmethod
    def make(cls, what: str = "dataset"):
        return cls(f"{what} is empty")


# ------------------------------------------------------------------------------
# Attack
# ------------------------------------------------------------------------------
class AttackError(Swe2Error):
    """
    The base class for errors raised when a manipulation method cannot be
    applied to a word.
    """


class TooShort(AttackError):
    @classmethod
    def make(cls, word: str, method: str, min_length: int = 2):
        return cls(
            f"{method} needs a word of at least {min_length} characters, "
            f"got {word!r}"
        )


class NoEligibleChar(AttackError):
    @classmethod
    def make(cls, word: str):
        return cls(f"word {word!r} has no character in the confusion table")


class NoEligiblePosition(AttackError):
    """
    Raised when every permitted adjacent pair of the word holds two identical
    characters, so swapping them leaves the word unchanged.
    """

    @classmethod
    def make(cls, word: str):
        return cls(f"word {word!r} has no swappable neighbor pair")


# ------------------------------------------------------------------------------
# Harness
# ------------------------------------------------------------------------------
class TooSmall(Swe2Error):
    @classmethod
    def make(cls, size: int, min_size: int):
        return cls(f"dataset has {size} rows, at least {min_size} are required")


class Unachievable(Swe2Error):
    @classmethod
    def make(cls, legit_per_hate: int, n_hate: int, n_legit: int):
        return cls(
            f"cannot keep {legit_per_hate} legitimate messages per hate speech: "
            f"need {legit_per_hate * n_hate}, only {n_legit} available "
            f"({n_hate} hate speeches)"
        )
