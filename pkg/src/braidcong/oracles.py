"""Membership oracles for B_n[2], B_n[4] and PB_n^2, and their cross-validation.

Level membership is read off the unreduced integral Burau matrix mod m.
PB_n^2 membership uses linking-number parity: PB_n abelianizes to
Z^C(n,2) through the pairwise linking numbers, so PB_n^2 is exactly the set
of pure braids whose linking numbers are all even.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

from .braid import (BraidWord, artin_generator, commutator, compose, interval_twist,
                    is_pure, linking_numbers, permutation_of, random_word)
from .burau import integral_burau_mod, rho_symplectic_mod

STRATA = ("random", "artin", "artin_squares", "commutators", "near_miss")


def in_level(w: BraidWord, m: int) -> bool:
    """rho(w) = I mod m."""
    R = integral_burau_mod(w, m)
    return bool(np.array_equal(R, np.eye(w.strands, dtype=np.int64)))


def in_level_symplectic(w: BraidWord, m: int, variant: int = 0) -> bool:
    """Same test in symplectic coordinates (n >= 3)."""
    R = rho_symplectic_mod(w, m, variant)
    return bool(np.array_equal(R, np.eye(R.shape[0], dtype=np.int64)))


def in_pb_squared(w: BraidWord) -> bool:
    if not is_pure(w):
        return False
    return bool(np.all(linking_numbers(w) % 2 == 0))


@dataclass
class MembershipReport:
    word: BraidWord
    is_pure: bool
    in_level2: bool
    in_pb_squared: bool
    in_level4: bool
    permutation: tuple[int, ...]
    linking_mod2: np.ndarray | None
    rho_mod2: np.ndarray
    rho_mod4: np.ndarray

    def consistent(self) -> bool:
        """Implications that hold for every braid: level 2 => pure, level 4 => level 2."""
        return (not self.in_level2 or self.is_pure) and (not self.in_level4 or self.in_level2)

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "is_pure": self.is_pure,
            "in_level2": self.in_level2,
            "in_pb_squared": self.in_pb_squared,
            "in_level4": self.in_level4,
            "permutation": list(self.permutation),
            "linking_mod2": None if self.linking_mod2 is None else self.linking_mod2.tolist(),
            "rho_mod2": self.rho_mod2.tolist(),
            "rho_mod4": self.rho_mod4.tolist(),
        }


def membership_report(w: BraidWord) -> MembershipReport:
    R4 = integral_burau_mod(w, 4)
    R2 = R4 % 2
    eye = np.eye(w.strands, dtype=np.int64)
    pure = is_pure(w)
    lk = linking_numbers(w) % 2 if pure else None
    return MembershipReport(
        word=w,
        is_pure=pure,
        in_level2=bool(np.array_equal(R2, eye)),
        in_pb_squared=pure and not lk.any(),
        in_level4=bool(np.array_equal(R4, eye)),
        permutation=permutation_of(w),
        linking_mod2=lk,
        rho_mod2=R2,
        rho_mod4=R4,
    )


# -- sample generation -------------------------------------------------------

def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def conjugated_artin(n: int, rng: random.Random, power: int = 1, max_conj: int = 6) -> BraidWord:
    i, j = rng.choice(list(combinations(range(1, n + 1), 2)))
    g = random_word(n, rng.randint(0, max_conj), rng)
    return (artin_generator(i, j, n) ** power).conj(g)


def random_pure_word(n: int, rng: random.Random, factors: int = 4) -> BraidWord:
    w = BraidWord(n)
    for _ in range(rng.randint(1, factors)):
        w = compose(w, conjugated_artin(n, rng, rng.choice((1, -1))))
    return w


def random_level4_word(n: int, rng: random.Random, factors: int = 4) -> BraidWord:
    """Product of conjugates of squared Artin generators (an element of PB_n^2)."""
    w = BraidWord(n)
    for _ in range(rng.randint(1, factors)):
        w = compose(w, conjugated_artin(n, rng, rng.choice((2, -2))))
    return w


def random_twist_square(n: int, rng: random.Random, max_conj: int = 8) -> BraidWord:
    """g^-1 T^{+-2} g for a round curve around a random interval of points."""
    a = rng.randint(1, n - 1)
    b = rng.randint(a + 1, n)
    g = random_word(n, rng.randint(0, max_conj), rng)
    return (interval_twist(a, b, n) ** rng.choice((2, -2))).conj(g)


def sample_stratum(name: str, n: int, count: int, seed=0, max_length: int = 24) -> list[BraidWord]:
    rng = _rng(seed)
    out = []
    for _ in range(count):
        if name == "random":
            w = random_word(n, rng.randint(0, max_length), rng)
        elif name == "artin":
            w = random_pure_word(n, rng)
        elif name == "artin_squares":
            w = random_level4_word(n, rng)
        elif name == "commutators":
            w = commutator(random_pure_word(n, rng, 2), random_pure_word(n, rng, 2))
        elif name == "near_miss":
            w = compose(random_level4_word(n, rng, 3), conjugated_artin(n, rng))
        else:
            raise ValueError(f"unknown stratum {name!r}")
        out.append(w)
    return out


def stratified_corpus(n: int, random_count: int, per_stratum: int, seed=0) -> dict[str, list[BraidWord]]:
    rng = _rng(seed)
    corpus = {"random": sample_stratum("random", n, random_count, rng)}
    for name in STRATA[1:]:
        corpus[name] = sample_stratum(name, n, per_stratum, rng)
    return corpus


# -- cross validation --------------------------------------------------------

@dataclass
class StratumCounts:
    total: int = 0
    pure: int = 0
    level2: int = 0
    level4: int = 0
    pb_squared: int = 0


@dataclass
class CrossValidation:
    n: int
    strata: dict[str, StratumCounts] = field(default_factory=dict)
    level2_counterexamples: list[str] = field(default_factory=list)
    level4_counterexamples: list[str] = field(default_factory=list)
    inconsistent: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.level2_counterexamples or self.level4_counterexamples or self.inconsistent)

    def totals(self) -> StratumCounts:
        t = StratumCounts()
        for c in self.strata.values():
            for k in ("total", "pure", "level2", "level4", "pb_squared"):
                setattr(t, k, getattr(t, k) + getattr(c, k))
        return t

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "strata": {k: vars(v) for k, v in self.strata.items()},
            "level2_counterexamples": self.level2_counterexamples,
            "level4_counterexamples": self.level4_counterexamples,
            "inconsistent": self.inconsistent,
        }


def cross_validate(n: int, samples: Mapping[str, Iterable[BraidWord]] | Sequence[BraidWord]) -> CrossValidation:
    """Check level 2 <=> pure and level 4 <=> PB_n^2 on every sample.

    Counterexamples are collected in the report rather than raised.
    """
    if not isinstance(samples, Mapping):
        samples = {"samples": samples}
    report = CrossValidation(n)
    for name, words in samples.items():
        counts = report.strata.setdefault(name, StratumCounts())
        for w in words:
            if w.strands != n:
                raise ValueError(f"sample on {w.strands} strands in an n={n} validation")
            r = membership_report(w)
            counts.total += 1
            counts.pure += r.is_pure
            counts.level2 += r.in_level2
            counts.level4 += r.in_level4
            counts.pb_squared += r.in_pb_squared
            if r.in_level2 != r.is_pure:
                report.level2_counterexamples.append(str(w))
            if r.in_level4 != r.in_pb_squared:
                report.level4_counterexamples.append(str(w))
            if not r.consistent():
                report.inconsistent.append(str(w))
    return report
