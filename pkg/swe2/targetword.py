# -*- coding: utf-8 -*-

"""
Locate the *target* word of a message, the single most significant word, and
split the message around it.

The target is searched in three stages:

1. the token with the strongest sentiment valence, if it reaches ``tau``
2. the token closest to a hate lexicon word, within two characters of difference
3. a random non-sentinel token
"""

import typing as T
import enum
import math
import random
import logging
import dataclasses
from pathlib import Path

from .exc import EmptyMessage, ParseError
from .textnorm import TokenSeq, normalize, is_sentinel

logger = logging.getLogger(__name__)

DEFAULT_TAU = 0.5
MAX_CHAR_DIFFERENCE = 2
VALENCE_BOUND = 4.0
DEFAULT_COMPOUND_ALPHA = 15.0


# ------------------------------------------------------------------------------
# Lexica
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class SentimentLexicon:
    """
    Token valence map, a stand-in for the VADER lexicon.

    :param entries: normalized token -> valence in [-4, 4].
    """

    entries: T.Dict[str, float] = dataclasses.field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, token: str) -> bool:
        return token in self.entries

    def score(self, token: str) -> float:
        return self.entries.get(token, 0.0)

    @classmethod
    def from_file(cls, path: T.Union[str, Path]) -> "SentimentLexicon":
        """
        Load a ``token<TAB>valence`` TSV. Extra columns (a VADER export carries
        the standard deviation and the raw ratings) are ignored. Entries that
        do not normalize to exactly one token, like emoticons, are skipped.
        """
        path = str(path)
        entries = dict()
        n_skipped = 0
        with open(path, "r", encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                line = line.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) < 2:
                    raise ParseError.make(path, lineno, "expected token<TAB>valence")
                try:
                    valence = float(parts[1])
                except ValueError:
                    raise ParseError.make(path, lineno, f"bad valence {parts[1]!r}")
                if not math.isfinite(valence) or abs(valence) > VALENCE_BOUND:
                    raise ParseError.make(
                        path, lineno, f"valence {valence} outside [-4, 4]"
                    )
                tokens = normalize(parts[0])
                if len(tokens) != 1:
                    n_skipped += 1
                    continue
                entries[tokens[0]] = valence
        logger.info(
            "loaded %d sentiment entries from %s (%d skipped)",
            len(entries),
            path,
            n_skipped,
        )
        return cls(entries=entries)


class HateLexicon:
    """
    A set of normalized hate speech words, with a cached near-match search.
    """

    def __init__(self, words: T.Iterable[str]):
        self.words: T.FrozenSet[str] = frozenset(words)
        self._by_length: T.Dict[int, T.List[str]] = dict()
        for word in sorted(self.words):
            self._by_length.setdefault(len(word), []).append(word)
        self._nearest_cache: T.Dict[str, T.Tuple[int, T.Optional[str]]] = dict()

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, token: str) -> bool:
        return token in self.words

    def __iter__(self) -> T.Iterator[str]:
        return iter(sorted(self.words))

    def nearest(
        self,
        token: str,
        max_difference: int = MAX_CHAR_DIFFERENCE,
    ) -> T.Tuple[int, T.Optional[str]]:
        """
        Find the lexicon word with the smallest :func:`char_difference` to
        ``token``, within ``max_difference``.

        :return: ``(difference, word)``, or ``(max_difference + 1, None)`` when
            nothing is close enough.
        """
        key = f"{max_difference}:{token}"
        if key in self._nearest_cache:
            return self._nearest_cache[key]
        best = (max_difference + 1, None)
        if token in self.words:
            best = (0, token)
        else:
            n = len(token)
            # char_difference >= the length gap
            for length in range(n - max_difference, n + max_difference + 1):
                for word in self._by_length.get(length, []):
                    diff = char_difference(token, word)
                    if diff < best[0]:
                        best = (diff, word)
        self._nearest_cache[key] = best
        return best

    @classmethod
    def from_file(cls, path: T.Union[str, Path]) -> "HateLexicon":
        """
        Load a one-word-per-line lexicon. Every entry must normalize to exactly
        one token.
        """
        path = str(path)
        words = list()
        with open(path, "r", encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                if not line.strip() or line.startswith("#"):
                    continue
                tokens = normalize(line)
                if len(tokens) != 1 or is_sentinel(tokens[0]):
                    raise ParseError.make(
                        path, lineno, f"{line.strip()!r} is not a single word"
                    )
                words.append(tokens[0])
        logger.info("loaded %d hate lexicon words from %s", len(words), path)
        return cls(words)


def load_sentiment_lexicon(path: T.Union[str, Path]) -> SentimentLexicon:
    return SentimentLexicon.from_file(path)


def load_hate_lexicon(path: T.Union[str, Path]) -> HateLexicon:
    return HateLexicon.from_file(path)


# ------------------------------------------------------------------------------
# Scores
# ------------------------------------------------------------------------------
def sentiment_score(token: str, lexicon: SentimentLexicon) -> float:
    """
    Valence of one token, ``0.0`` if the lexicon doesn't know it.
    """
    return lexicon.score(token)


def compound_score(
    tokens: TokenSeq,
    lexicon: SentimentLexicon,
    alpha: float = DEFAULT_COMPOUND_ALPHA,
) -> float:
    """
    VADER style compound score: ``S / sqrt(S^2 + alpha)`` clipped to [-1, 1],
    where ``S`` is the sum of token valences.
    """
    total = sum(lexicon.score(token) for token in tokens)
    if total == 0:
        return 0.0
    score = total / math.sqrt(total * total + alpha)
    return max(-1.0, min(1.0, score))


def lcs_length(a: str, b: str) -> int:
    """
    Length of a longest common subsequence of ``a`` and ``b``.
    """
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return 0
    previous = [0] * (len(b) + 1)
    for char_a in a:
        current = [0]
        for j, char_b in enumerate(b, start=1):
            if char_a == char_b:
                current.append(previous[j - 1] + 1)
            else:
                current.append(max(current[j - 1], previous[j]))
        previous = current
    return previous[-1]


def char_difference(a: str, b: str) -> int:
    """
    Number of characters to delete from both strings to make them equal,
    ``|a| + |b| - 2 * lcs(a, b)``.
    """
    return len(a) + len(b) - 2 * lcs_length(a, b)


# ------------------------------------------------------------------------------
# Target selection
# ------------------------------------------------------------------------------
class SelectionMethod(str, enum.Enum):
    Sentiment = "Sentiment"
    LexiconMatch = "LexiconMatch"
    Random = "Random"


@dataclasses.dataclass(frozen=True)
class TargetSplit:
    """
    A message split around its target word:
    ``before + [target] + after == tokens``.
    """

    before: T.Tuple[str, ...]
    target: str
    after: T.Tuple[str, ...]
    target_index: int
    selection_method: SelectionMethod

    @property
    def tokens(self) -> TokenSeq:
        return list(self.before) + [self.target] + list(self.after)

    @classmethod
    def at(
        cls,
        tokens: TokenSeq,
        index: int,
        method: SelectionMethod,
    ) -> "TargetSplit":
        if not (0 <= index < len(tokens)):
            raise IndexError(f"target index {index} out of range")
        return cls(
            before=tuple(tokens[:index]),
            target=tokens[index],
            after=tuple(tokens[index + 1 :]),
            target_index=index,
            selection_method=method,
        )


def message_rng(seed: int, tokens: TokenSeq) -> random.Random:
    """
    A random source derived from the global seed and the message content, so
    that the random fallback picks the same word for the same message every
    time.
    """
    return random.Random(f"{seed}:{' '.join(tokens)}")


def eligible_indices(tokens: TokenSeq) -> T.List[int]:
    """
    Indices of tokens that may be picked as a target. Sentinels are skipped,
    unless the message holds nothing else.
    """
    indices = [i for i, token in enumerate(tokens) if not is_sentinel(token)]
    if not indices:
        indices = list(range(len(tokens)))
    return indices


def find_near_match(
    tokens: TokenSeq,
    indices: T.Sequence[int],
    hate_lexicon: HateLexicon,
    max_difference: int = MAX_CHAR_DIFFERENCE,
) -> T.Optional[int]:
    """
    Index of the token with the smallest character difference to any lexicon
    word, first index on ties, ``None`` if nothing is within ``max_difference``.
    """
    best_index, best_diff = None, max_difference + 1
    for i in indices:
        diff, _ = hate_lexicon.nearest(tokens[i], max_difference)
        if diff < best_diff:
            best_index, best_diff = i, diff
    return best_index


def find_target(
    tokens: TokenSeq,
    sentiment_lexicon: SentimentLexicon,
    hate_lexicon: HateLexicon,
    rng: random.Random,
    tau: float = DEFAULT_TAU,
) -> TargetSplit:
    """
    Pick the target word of a message and split the message around it.

    :param tokens: normalized, non-empty token sequence.
    :param rng: random source used only by the random fallback.
    :param tau: minimal absolute valence for the sentiment stage.
    """
    if not tokens:
        raise EmptyMessage.make("find_target")
    indices = eligible_indices(tokens)

    best_index, best_abs = None, -1.0
    for i in indices:
        value = abs(sentiment_score(tokens[i], sentiment_lexicon))
        if value > best_abs:
            best_index, best_abs = i, value
    if best_index is not None and best_abs >= tau:
        return TargetSplit.at(tokens, best_index, SelectionMethod.Sentiment)

    index = find_near_match(tokens, indices, hate_lexicon)
    if index is not None:
        return TargetSplit.at(tokens, index, SelectionMethod.LexiconMatch)

    index = indices[rng.randrange(len(indices))]
    return TargetSplit.at(tokens, index, SelectionMethod.Random)
