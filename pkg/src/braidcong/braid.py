"""Braid words on n strands and their combinatorics.

A letter ``+i`` is the half twist sigma_i, ``-i`` its inverse, and words are
composed left to right. The word problem is solved through the faithful
Artin action on the free group <x_1, ..., x_n>.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from . import freegroup
from .freegroup import WordTooLong

__all__ = [
    "BraidWord",
    "WordTooLong",
    "artin_generator",
    "brunnian_sample",
    "commutator",
    "compose",
    "delete_strand",
    "delete_strands",
    "interval_twist",
    "invert",
    "is_pure",
    "is_trivial",
    "linking_numbers",
    "pair_generators",
    "parse_braid",
    "permutation_of",
    "push_generator",
    "random_word",
    "round_twist",
    "same_braid",
    "strand_position",
]

DEFAULT_LENGTH_BOUND = 10**6


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"need at least one strand, got {self.strands}")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.strands - 1:
                raise ValueError(f"letter {a} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __invert__(self) -> "BraidWord":
        return invert(self)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else invert(self)
        out = BraidWord(self.strands)
        for _ in range(abs(k)):
            out = compose(out, base)
        return out

    def conj(self, g: "BraidWord") -> "BraidWord":
        """g^-1 * self * g."""
        return compose(compose(invert(g), self), g)

    def reduced(self) -> "BraidWord":
        return BraidWord(self.strands, freegroup.reduce_word(self.letters))

    def __str__(self) -> str:
        return f"n={self.strands}; " + " ".join(str(a) for a in self.letters)


_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*;")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"n=3; 1 -2 1"``; without a header ``strands`` (or max index + 1) is used."""
    m = _HEADER.match(text)
    if m:
        n_hdr = int(m.group(1))
        if strands is not None and strands != n_hdr:
            raise ValueError(f"header says n={n_hdr} but {strands} strands requested")
        strands = n_hdr
        text = text[m.end():]
    tokens = text.replace(",", " ").split()
    try:
        letters = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"cannot parse braid word {text!r}") from None
    if strands is None:
        strands = max((abs(a) for a in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.strands != v.strands:
        raise ValueError(f"strand counts differ: {u.strands} vs {v.strands}")
    return BraidWord(u.strands, freegroup.concat(freegroup.reduce_word(u.letters),
                                                  freegroup.reduce_word(v.letters)))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, freegroup.free_inverse(w.letters))


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    """[a, b] = a b a^-1 b^-1."""
    return compose(compose(a, b), compose(invert(a), invert(b)))


def permutation_of(w: BraidWord) -> tuple[int, ...]:
    """``result[i-1]`` is the final position of the strand starting at position i."""
    pos_of_strand = list(range(1, w.strands + 1))
    strand_at = list(range(w.strands + 1))  # strand_at[p] = strand currently at p
    for a in w.letters:
        i = abs(a)
        s, t = strand_at[i], strand_at[i + 1]
        strand_at[i], strand_at[i + 1] = t, s
        pos_of_strand[s - 1] = i + 1
        pos_of_strand[t - 1] = i
    return tuple(pos_of_strand)


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w) == tuple(range(1, w.strands + 1))


def strand_position(w: BraidWord, i: int) -> int:
    """Final position of the strand that starts at position i."""
    return permutation_of(w)[i - 1]


def artin_generator(i: int, j: int, n: int) -> BraidWord:
    """a_ij = omega^-1 sigma_i^2 omega with omega = sigma_{i+1} ... sigma_{j-1}."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    omega = list(range(i + 1, j))
    letters = [-a for a in reversed(omega)] + [i, i] + omega
    return BraidWord(n, tuple(letters))


def linking_numbers(w: BraidWord) -> np.ndarray:
    """Symmetric matrix of pairwise linking numbers of a pure braid (a_ij counts 1)."""
    if not is_pure(w):
        raise ValueError("linking numbers are only defined for pure braids")
    n = w.strands
    crossings = np.zeros((n, n), dtype=np.int64)
    strand_at = list(range(n + 1))
    for a in w.letters:
        i = abs(a)
        s, t = strand_at[i], strand_at[i + 1]
        sign = 1 if a > 0 else -1
        crossings[s - 1, t - 1] += sign
        crossings[t - 1, s - 1] += sign
        strand_at[i], strand_at[i + 1] = t, s
    # each full twist between two strands is two crossings of the same sign
    return crossings // 2


def delete_strand(w: BraidWord, i: int) -> BraidWord:
    """Forget the strand starting at position i; works for any braid."""
    n = w.strands
    if not 1 <= i <= n:
        raise ValueError(f"strand {i} out of range for {n} strands")
    if n == 1:
        raise ValueError("cannot delete the only strand")
    p = i
    out = []
    for a in w.letters:
        k = abs(a)
        if p == k:
            p = k + 1
        elif p == k + 1:
            p = k
        elif p > k + 1:
            out.append(a)
        else:
            out.append(a - 1 if a > 0 else a + 1)
    return BraidWord(n - 1, freegroup.reduce_word(out))


def delete_strands(w: BraidWord, strands: Iterable[int]) -> BraidWord:
    """Forget several strands, named by their starting positions in ``w``."""
    remaining = sorted(set(strands), reverse=True)
    for s in remaining:
        w = delete_strand(w, s)
    return w


def _artin_images(w: BraidWord, length_bound: int) -> list[freegroup.FreeWord]:
    images: list[freegroup.FreeWord] = [(k,) for k in range(1, w.strands + 1)]
    total = w.strands
    for a in w.letters:
        i = abs(a) - 1
        xi, xj = images[i], images[i + 1]
        if a > 0:
            # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            images[i] = freegroup.concat(xi, xj, freegroup.free_inverse(xi))
            images[i + 1] = xi
        else:
            # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            images[i] = xj
            images[i + 1] = freegroup.concat(freegroup.free_inverse(xj), xi, xj)
        total += len(images[i]) + len(images[i + 1]) - len(xi) - len(xj)
        if total > length_bound:
            raise WordTooLong(f"free-group images exceed {length_bound} letters")
    return images


def is_trivial(w: BraidWord, length_bound: int = DEFAULT_LENGTH_BOUND) -> bool:
    """True iff w is the identity braid.

    Compares the actions of the two halves u, v of w = uv (u = v^-1 in B_n),
    which keeps intermediate free words far shorter than acting with all of w.
    """
    letters = freegroup.reduce_word(w.letters)
    half = len(letters) // 2
    u = BraidWord(w.strands, letters[:half])
    v = BraidWord(w.strands, letters[half:])
    return _artin_images(u, length_bound) == _artin_images(invert(v), length_bound)


def same_braid(u: BraidWord, v: BraidWord, length_bound: int = DEFAULT_LENGTH_BOUND) -> bool:
    return is_trivial(compose(u, invert(v)), length_bound)


def push_generator(j: int, n: int) -> BraidWord:
    """Push p_1 once around p_j along the loop passing below the other points.

    These n-1 words freely generate the kernel of forgetting strand 1.
    """
    if not 2 <= j <= n:
        raise ValueError(f"need 2 <= j <= n, got j={j}, n={n}")
    return artin_generator(1, j, n)


def interval_twist(a: int, b: int, n: int) -> BraidWord:
    """Dehn twist about the round curve enclosing points a..b: (sigma_a ... sigma_{b-1})^(b-a+1)."""
    if not 1 <= a < b <= n:
        raise ValueError(f"need 1 <= a < b <= n, got a={a}, b={b}, n={n}")
    return BraidWord(n, tuple(range(a, b)) * (b - a + 1))


def round_twist(k: int, n: int) -> BraidWord:
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    return interval_twist(1, k, n)


def random_word(n: int, length: int, seed: int | random.Random) -> BraidWord:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if length > 0 and n < 2:
        raise ValueError("no generators on fewer than two strands")
    letters = [rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(length)]
    return BraidWord(n, tuple(letters))


def brunnian_sample(n: int, seed: int = 0) -> BraidWord:
    """A nontrivial braid that dies when any single strand is deleted.

    Iterated commutator of the push generators a_12, ..., a_1n; for a nonzero
    seed the order, signs and a random conjugator vary.
    """
    if n < 3:
        raise ValueError("Brunnian samples need n >= 3")
    rng = random.Random(seed)
    js = list(range(2, n + 1))
    signs = [1] * len(js)
    if seed:
        rng.shuffle(js)
        signs = [rng.choice((1, -1)) for _ in js]
    w = push_generator(js[0], n) ** signs[0]
    for j, s in zip(js[1:], signs[1:]):
        w = commutator(w, push_generator(j, n) ** s)
    if seed:
        w = w.conj(random_word(n, rng.randint(1, 8), rng))
    return w


def pair_generators(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))
