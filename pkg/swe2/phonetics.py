# -*- coding: utf-8 -*-

"""
Word to phoneme conversion.

A word is looked up in a CMU format pronouncing dictionary first. Unknown words
go through a deterministic grapheme-to-phoneme fallback: look-alike characters
are mapped back to letters (``tr@sh -> trash``), then a greedy longest-match
over a grapheme chunk table produces the phonemes.

Usage example::

    pron_dict = PronDict.from_file("cmudict.dict")
    to_phonemes("hello", pron_dict)  # ('HH', 'AH', 'L', 'OW')
    to_phonemes("jooz", pron_dict)   # ('JH', 'UW', 'Z')
"""

import typing as T
import logging
from pathlib import Path
from collections import Counter, defaultdict

from .exc import ParseError, UnmappableInput
from .paths import path_g2p_chunks

logger = logging.getLogger(__name__)

PhonemeSeq = T.Tuple[str, ...]

# 39 ARPAbet symbols, stress digits stripped
PHONEME_INVENTORY: T.Tuple[str, ...] = (
    "AA", "AE", "AH", "AO", "AW", "AY", "B", "CH", "D", "DH",
    "EH", "ER", "EY", "F", "G", "HH", "IH", "IY", "JH", "K",
    "L", "M", "N", "NG", "OW", "OY", "P", "R", "S", "SH",
    "T", "TH", "UH", "UW", "V", "W", "Y", "Z", "ZH",
)  # fmt: skip
_inventory = frozenset(PHONEME_INVENTORY)
VOWELS = frozenset(
    ["AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER", "EY", "IH", "IY", "OW", "OY", "UH", "UW"]
)

LEET_TABLE: T.Dict[str, str] = {
    "0": "o",
    "1": "i",
    "2": "z",
    "3": "e",
    "4": "a",
    "5": "s",
    "6": "g",
    "7": "t",
    "8": "b",
    "9": "g",
    "@": "a",
    "$": "s",
    "!": "i",
    "|": "l",
    "+": "t",
}


def strip_stress(symbol: str) -> str:
    return symbol.rstrip("012")


def leet_normalize(word: str) -> str:
    """
    Map look-alike characters back to letters, lower-case, and drop anything
    that is still not a letter.
    """
    chars = list()
    for char in word.lower():
        char = LEET_TABLE.get(char, char)
        if "a" <= char <= "z":
            chars.append(char)
    return "".join(chars)


# ------------------------------------------------------------------------------
# Pronouncing dictionary
# ------------------------------------------------------------------------------
class PronDict:
    """
    Immutable word -> phoneme sequence map loaded from a CMU format file.
    """

    def __init__(self, entries: T.Dict[str, PhonemeSeq]):
        self._entries = dict(entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, word: str) -> bool:
        return word in self._entries

    def get(self, word: str) -> T.Optional[PhonemeSeq]:
        return self._entries.get(word)

    def items(self) -> T.Iterable[T.Tuple[str, PhonemeSeq]]:
        return self._entries.items()

    @classmethod
    def from_lines(
        cls,
        lines: T.Iterable[str],
        path: T.Optional[str] = None,
    ) -> "PronDict":
        """
        Parse CMU dictionary lines: ``WORD  PH0 PH1 ...``. Variants are
        written ``WORD(1)``, only the first pronunciation of a word is kept.
        Lines starting with ``;;;`` are comments.
        """
        entries: T.Dict[str, PhonemeSeq] = dict()
        n_variants = 0
        for lineno, line in enumerate(lines, start=1):
            if line.startswith(";;;"):
                continue
            if "#" in line:  # cmudict.dict inline comments
                line = line[: line.index("#")]
            parts = line.split()
            if not parts:
                continue
            if len(parts) < 2:
                raise ParseError.make(path, lineno, "word without pronunciation")
            word = parts[0].lower()
            if word.endswith(")") and "(" in word:
                word = word[: word.index("(")]
                n_variants += 1
            if not word:
                raise ParseError.make(path, lineno, "empty word")
            phonemes = tuple(strip_stress(symbol) for symbol in parts[1:])
            for symbol in phonemes:
                if symbol not in _inventory:
                    raise ParseError.make(path, lineno, f"unknown phoneme {symbol!r}")
            entries.setdefault(word, phonemes)
        logger.debug("parsed %d words (%d variant lines)", len(entries), n_variants)
        return cls(entries)

    @classmethod
    def from_file(cls, path: T.Union[str, Path]) -> "PronDict":
        path = str(path)
        # cmudict-0.7b is latin-1, cmudict.dict is ascii
        with open(path, "r", encoding="latin-1") as f:
            pron_dict = cls.from_lines(f, path=path)
        logger.info("loaded %d pronunciations from %s", len(pron_dict), path)
        return pron_dict


def load_pron_dict(path: T.Union[str, Path]) -> PronDict:
    return PronDict.from_file(path)


# ------------------------------------------------------------------------------
# Grapheme chunk table
# ------------------------------------------------------------------------------
class ChunkTable:
    """
    Grapheme chunk -> phoneme sequence map used by the greedy fallback.
    """

    def __init__(self, chunks: T.Dict[str, PhonemeSeq]):
        self.chunks = dict(chunks)
        self.max_length = max((len(chunk) for chunk in self.chunks), default=0)

    def __len__(self) -> int:
        return len(self.chunks)

    def __contains__(self, chunk: str) -> bool:
        return chunk in self.chunks

    def get(self, chunk: str) -> T.Optional[PhonemeSeq]:
        return self.chunks.get(chunk)

    def sorted_items(self) -> T.List[T.Tuple[str, PhonemeSeq]]:
        """
        Rows in file order: descending chunk length, then alphabetical.
        """
        return sorted(self.chunks.items(), key=lambda kv: (-len(kv[0]), kv[0]))

    def transcribe(self, letters: str) -> PhonemeSeq:
        """
        Greedy longest match from left to right. Letters without any entry are
        skipped.
        """
        phonemes = list()
        i, n = 0, len(letters)
        while i < n:
            for length in range(min(self.max_length, n - i), 0, -1):
                value = self.chunks.get(letters[i : i + length])
                if value is not None:
                    phonemes.extend(value)
                    i += length
                    break
            else:
                i += 1
        return tuple(phonemes)

    @classmethod
    def from_file(cls, path: T.Union[str, Path]) -> "ChunkTable":
        """
        Load a ``grapheme_chunk<TAB>phoneme[,phoneme...]`` TSV.
        """
        path = str(path)
        chunks = dict()
        with open(path, "r", encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2 or not parts[0] or not parts[1]:
                    raise ParseError.make(path, lineno, "expected chunk<TAB>phonemes")
                phonemes = tuple(symbol.strip() for symbol in parts[1].split(","))
                for symbol in phonemes:
                    if symbol not in _inventory:
                        raise ParseError.make(
                            path, lineno, f"unknown phoneme {symbol!r}"
                        )
                chunks[parts[0]] = phonemes
        return cls(chunks)

    def to_file(self, path: T.Union[str, Path]):
        with open(str(path), "w", encoding="utf-8") as f:
            for chunk, phonemes in self.sorted_items():
                f.write(f"{chunk}\t{','.join(phonemes)}\n")


def load_chunk_table(path: T.Union[str, Path]) -> ChunkTable:
    return ChunkTable.from_file(path)


def write_chunk_table(table: ChunkTable, path: T.Union[str, Path]):
    table.to_file(path)


_default_chunk_table: T.Optional[ChunkTable] = None


def get_default_chunk_table() -> ChunkTable:
    """
    The chunk table shipped with the package, loaded once.
    """
    global _default_chunk_table
    if _default_chunk_table is None:
        _default_chunk_table = ChunkTable.from_file(path_g2p_chunks)
    return _default_chunk_table


def g2p_fallback(
    word: str,
    table: T.Optional[ChunkTable] = None,
) -> PhonemeSeq:
    """
    Predict the phonemes of a word that is not in the dictionary.

    :raises UnmappableInput: if no character of the word can be mapped.
    """
    if table is None:
        table = get_default_chunk_table()
    letters = leet_normalize(word)
    phonemes = table.transcribe(letters) if letters else tuple()
    if not phonemes:
        raise UnmappableInput.make(word)
    return phonemes


def to_phonemes(
    word: str,
    pron_dict: T.Optional[PronDict] = None,
    table: T.Optional[ChunkTable] = None,
) -> PhonemeSeq:
    """
    Dictionary lookup, then lookup of the leet normalized spelling, then the
    greedy fallback.
    """
    if pron_dict is not None:
        phonemes = pron_dict.get(word)
        if phonemes is not None:
            return phonemes
        phonemes = pron_dict.get(leet_normalize(word))
        if phonemes is not None:
            return phonemes
    return g2p_fallback(word, table)


# ------------------------------------------------------------------------------
# Offline chunk table builder
# ------------------------------------------------------------------------------
_MAX_CHUNK = 4
_MAX_PHONEMES_PER_CHUNK = 2
_LETTER_VOWELS = frozenset("aeiouy")


def _alignment_cost(
    chunk: str,
    phonemes: PhonemeSeq,
    seed: ChunkTable,
) -> T.Optional[float]:
    if not phonemes:
        # only single letters may be silent
        return 1.2 if len(chunk) == 1 else None
    if seed.get(chunk) == phonemes:
        return 0.1
    cost = 1.0 + 0.5 * (len(chunk) - 1) + 0.5 * (len(phonemes) - 1)
    if len(chunk) == 1 and len(phonemes) == 1:
        is_vowel_letter = chunk in _LETTER_VOWELS
        is_vowel_phoneme = phonemes[0] in VOWELS
        cost += -0.3 if is_vowel_letter == is_vowel_phoneme else 0.3
    return cost


def align_word(
    word: str,
    phonemes: PhonemeSeq,
    seed: ChunkTable,
) -> T.Optional[T.List[T.Tuple[str, PhonemeSeq]]]:
    """
    Monotone alignment of a spelling to its phonemes: every step consumes a
    chunk of 1-4 letters and emits 0-2 phonemes, minimizing the total cost
    against the seed table.

    :return: list of ``(chunk, phonemes)`` pairs, ``None`` if no alignment
        exists.
    """
    n, m = len(word), len(phonemes)
    inf = float("inf")
    cost = [[inf] * (m + 1) for _ in range(n + 1)]
    back: T.List[T.List[T.Optional[T.Tuple[int, int]]]] = [
        [None] * (m + 1) for _ in range(n + 1)
    ]
    cost[0][0] = 0.0
    for i in range(n):
        for j in range(m + 1):
            if cost[i][j] == inf:
                continue
            for k in range(1, min(_MAX_CHUNK, n - i) + 1):
                chunk = word[i : i + k]
                for l in range(0, min(_MAX_PHONEMES_PER_CHUNK, m - j) + 1):
                    step = _alignment_cost(chunk, phonemes[j : j + l], seed)
                    if step is None:
                        continue
                    total = cost[i][j] + step
                    if total < cost[i + k][j + l]:
                        cost[i + k][j + l] = total
                        back[i + k][j + l] = (i, j)
    if cost[n][m] == inf:
        return None
    pairs = list()
    i, j = n, m
    while (i, j) != (0, 0):
        pi, pj = back[i][j]
        pairs.append((word[pi:i], tuple(phonemes[pj:j])))
        i, j = pi, pj
    pairs.reverse()
    return pairs


def build_chunk_table(
    pron_dict: PronDict,
    seed: T.Optional[ChunkTable] = None,
    min_count: int = 2,
    max_words: T.Optional[int] = None,
) -> ChunkTable:
    """
    Rebuild a chunk table from a pronouncing dictionary. Every alphabetic
    dictionary word is aligned with :func:`align_word`, and each chunk keeps
    its most frequent phoneme sequence. Single letters always keep an entry,
    so the fallback stays total.
    """
    if seed is None:
        seed = get_default_chunk_table()
    counts: T.Dict[str, Counter] = defaultdict(Counter)
    n_aligned = 0
    for ith, (word, phonemes) in enumerate(sorted(pron_dict.items())):
        if max_words is not None and ith >= max_words:
            break
        if not word.isalpha() or not word.isascii():
            continue
        pairs = align_word(word, phonemes, seed)
        if pairs is None:
            continue
        n_aligned += 1
        for chunk, chunk_phonemes in pairs:
            if chunk_phonemes:
                counts[chunk][chunk_phonemes] += 1

    chunks: T.Dict[str, PhonemeSeq] = dict()
    for chunk, counter in counts.items():
        # most frequent first, ties broken by the phoneme string
        (phonemes, count), *_ = sorted(
            counter.items(), key=lambda kv: (-kv[1], kv[0])
        )
        if len(chunk) == 1 or count >= min_count:
            chunks[chunk] = phonemes
    for chunk, phonemes in seed.chunks.items():
        if len(chunk) == 1:
            chunks.setdefault(chunk, phonemes)
    logger.info(
        "built %d chunk rows from %d aligned words", len(chunks), n_aligned
    )
    return ChunkTable(chunks)
