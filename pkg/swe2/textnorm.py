# -*- coding: utf-8 -*-

"""
Turn a raw message into the canonical token sequence used everywhere else.

Rules, applied in order:

1. an ``@mention`` token becomes ``USER``
2. a URL token (``http://``, ``https://`` or ``www.`` prefix) becomes ``URL``
3. the leading ``#`` of a hashtag is removed, the content is kept
4. all non-sentinel text is lower-cased
5. apostrophes are deleted, other punctuation and symbols become spaces, and
   anything that is not ``[a-z0-9]`` (emoji, non ASCII letters) is dropped
6. split on whitespace

Usage example::

    >>> normalize("@Bob I LOVE #Winning http://t.co/x")
    ['USER', 'i', 'love', 'winning', 'URL']
"""

import typing as T
import re
import unicodedata

USER = "USER"
URL = "URL"
SENTINELS = frozenset([USER, URL])

TokenSeq = T.List[str]

_url_prefix = re.compile(r"^(https?://|www\.)", re.IGNORECASE)
_apostrophes = frozenset("'‘’ʼ`")


def is_sentinel(token: str) -> bool:
    return token in SENTINELS


def _clean_chars(text: str) -> str:
    chars = list()
    for char in text:
        if char in _apostrophes:
            continue
        if ("a" <= char <= "z") or ("0" <= char <= "9"):
            chars.append(char)
        elif char.isspace():
            chars.append(" ")
        else:
            category = unicodedata.category(char)
            # punctuation (P*) and symbols (S*) separate words
            if category[0] in "PS":
                chars.append(" ")
    return "".join(chars)


def _normalize_word(word: str) -> T.List[str]:
    if word in SENTINELS:
        return [word]
    if len(word) > 1 and word.startswith("@"):
        return [USER]
    if _url_prefix.match(word):
        return [URL]
    if word.startswith("#"):
        word = word.lstrip("#")
    return _clean_chars(word.lower()).split()


def normalize(raw: str) -> TokenSeq:
    """
    Normalize one raw message to its token sequence. A message without any
    content yields an empty list, the caller decides what to do with it.
    """
    tokens: TokenSeq = list()
    for word in raw.split():
        tokens.extend(_normalize_word(word))
    return tokens


def normalize_text(raw: str) -> str:
    """
    Same as :func:`normalize`, tokens joined by a single space.
    """
    return " ".join(normalize(raw))
