# -*- coding: utf-8 -*-

"""
Per word character manipulations ("bugs"): swap two neighbor characters,
delete one character, substitute one character with a look-alike.

Each function takes an explicit :class:`random.Random` and changes exactly one
position of the word.
"""

import typing as T
import enum
import random
import logging
import dataclasses
from pathlib import Path

from ..exc import ParseError, TooShort, NoEligibleChar, NoEligiblePosition
from ..paths import path_confusion_table

logger = logging.getLogger(__name__)


class AttackMethod(str, enum.Enum):
    Swap = "Swap"
    Delete = "Delete"
    SubC = "SubC"


# candidates are generated, and ties broken, in this order
METHOD_ORDER: T.Tuple[AttackMethod, ...] = (
    AttackMethod.Swap,
    AttackMethod.Delete,
    AttackMethod.SubC,
)


@dataclasses.dataclass(frozen=True)
class ConfusionTable:
    """
    Character -> visually similar substitutes, e.g. ``a -> (@, 4)``.
    """

    substitutes: T.Dict[str, T.Tuple[str, ...]]

    def __post_init__(self):
        for char, subs in self.substitutes.items():
            if len(char) != 1:
                raise ValueError(f"confusion key {char!r} is not a single character")
            if not subs:
                raise ValueError(f"confusion key {char!r} has no substitute")
            for sub in subs:
                if len(sub) != 1:
                    raise ValueError(f"substitute {sub!r} is not a single character")
                if sub == char:
                    raise ValueError(f"character {char!r} maps to itself")

    def __len__(self) -> int:
        return len(self.substitutes)

    def __contains__(self, char: str) -> bool:
        return char in self.substitutes

    def get(self, char: str) -> T.Tuple[str, ...]:
        return self.substitutes.get(char, tuple())

    def eligible_positions(self, word: str) -> T.List[int]:
        return [i for i, char in enumerate(word) if char in self.substitutes]

    @classmethod
    def from_file(cls, path: T.Union[str, Path]) -> "ConfusionTable":
        """
        Load a ``char<TAB>sub[,sub...]`` TSV. Lines starting with ``#`` are
        comments.
        """
        path = str(path)
        substitutes = dict()
        with open(path, "r", encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                line = line.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2:
                    raise ParseError.make(path, lineno, "expected char<TAB>substitutes")
                char, subs = parts[0], tuple(
                    sub for sub in parts[1].split(",") if sub
                )
                if len(char) != 1 or not subs or any(len(sub) != 1 for sub in subs):
                    raise ParseError.make(path, lineno, "keys and substitutes must be single characters")
                if char in subs:
                    raise ParseError.make(path, lineno, f"{char!r} maps to itself")
                substitutes[char] = subs
        logger.info("loaded %d confusion rows from %s", len(substitutes), path)
        return cls(substitutes=substitutes)

    @classmethod
    def default(cls) -> "ConfusionTable":
        """
        The confusion table shipped with the package.
        """
        return cls.from_file(path_confusion_table)


def swap_positions(word: str) -> T.List[int]:
    """
    Positions ``i`` where swapping ``word[i]`` and ``word[i + 1]`` is allowed.
    Words of length 4 or more keep their first and last character in place.
    Pairs of identical characters are skipped.
    """
    n = len(word)
    if n >= 4:
        candidates = range(1, n - 2)
    else:
        candidates = range(n - 1)
    return [i for i in candidates if word[i] != word[i + 1]]


def bug_swap(word: str, rng: random.Random) -> str:
    if len(word) < 2:
        raise TooShort.make(word, AttackMethod.Swap.value)
    positions = swap_positions(word)
    if not positions:
        raise NoEligiblePosition.make(word)
    i = rng.choice(positions)
    return word[:i] + word[i + 1] + word[i] + word[i + 2 :]


def bug_delete(word: str, rng: random.Random) -> str:
    if len(word) < 2:
        raise TooShort.make(word, AttackMethod.Delete.value)
    i = rng.randrange(len(word))
    return word[:i] + word[i + 1 :]


def bug_subc(word: str, table: ConfusionTable, rng: random.Random) -> str:
    positions = table.eligible_positions(word)
    if not positions:
        raise NoEligibleChar.make(word)
    i = rng.choice(positions)
    sub = rng.choice(table.get(word[i]))
    return word[:i] + sub + word[i + 1 :]


def apply_method(
    method: AttackMethod,
    word: str,
    table: ConfusionTable,
    rng: random.Random,
) -> str:
    if method is AttackMethod.Swap:
        return bug_swap(word, rng)
    elif method is AttackMethod.Delete:
        return bug_delete(word, rng)
    elif method is AttackMethod.SubC:
        return bug_subc(word, table, rng)
    else:  # pragma: no cover
        raise NotImplementedError(method)
