"""Reduced words in a free group, used by the braid word problem.

A free word is a tuple of nonzero ints: ``k`` stands for ``x_k`` and ``-k``
for its inverse.
"""

from __future__ import annotations

from typing import Iterable, Sequence

FreeWord = tuple[int, ...]


class WordTooLong(RuntimeError):
    """An intermediate free word exceeded the configured length bound."""


def reduce_word(letters: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for a in letters:
        if a == 0:
            raise ValueError("free word letters must be nonzero")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def free_inverse(word: Sequence[int]) -> FreeWord:
    return tuple(-a for a in reversed(word))


def concat(*words: Sequence[int]) -> FreeWord:
    """Product of already reduced words; cancellation only happens at the seams."""
    out: list[int] = []
    for word in words:
        i = 0
        n = len(word)
        while i < n and out and out[-1] == -word[i]:
            out.pop()
            i += 1
        out.extend(word[i:])
    return tuple(out)


def is_reduced(word: Sequence[int]) -> bool:
    return all(word[i] != -word[i + 1] for i in range(len(word) - 1)) and 0 not in word


def commutator(a: Sequence[int], b: Sequence[int]) -> FreeWord:
    """[a, b] = a b a^-1 b^-1."""
    return concat(a, b, free_inverse(a), free_inverse(b))


def substitute(word: Sequence[int], images: Sequence[Sequence[int]]) -> FreeWord:
    """Apply the endomorphism ``x_k -> images[k-1]`` to ``word``."""
    pieces = []
    for a in word:
        img = images[abs(a) - 1]
        pieces.append(img if a > 0 else free_inverse(img))
    return concat(*pieces)
