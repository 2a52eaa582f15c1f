import random

import pytest

from braidcong.braid import BraidWord, artin_generator, commutator, parse_braid, random_word
from braidcong.oracles import (STRATA, cross_validate, in_level, in_level_symplectic, in_pb_squared,
                               membership_report, random_twist_square, sample_stratum,
                               stratified_corpus)


def test_level_examples():
    e = BraidWord(3)
    assert in_level(e, 2) and in_level(e, 4)
    assert not in_level(parse_braid("n=3; 1"), 2)
    a12 = artin_generator(1, 2, 3)
    assert in_level(a12, 2) and not in_level(a12, 4)
    assert in_level(a12 ** 2, 4)


def test_pb_squared_examples():
    a12, a13 = artin_generator(1, 2, 4), artin_generator(1, 3, 4)
    assert not in_pb_squared(a12)
    assert in_pb_squared(a12 ** 2)
    assert in_pb_squared(commutator(a12, a13))
    assert not in_pb_squared(parse_braid("n=4; 1"))


def test_symplectic_membership_agrees():
    rng = random.Random(4)
    for n in (3, 4, 5, 6):
        for _ in range(60):
            w = random_word(n, rng.randint(0, 16), rng)
            for m in (2, 4):
                assert in_level(w, m) == in_level_symplectic(w, m) == in_level_symplectic(w, m, 5)


def test_membership_report():
    r = membership_report(artin_generator(1, 3, 3) ** 2)
    assert r.is_pure and r.in_level2 and r.in_level4 and r.in_pb_squared and r.consistent()
    d = r.to_dict()
    assert d["word"].startswith("n=3;") and d["linking_mod2"] == [[0, 0, 0]] * 3
    s = membership_report(parse_braid("n=3; 1 2"))
    assert s.linking_mod2 is None and not s.in_level2 and s.permutation == (3, 1, 2)


def test_twist_squares_are_level_four():
    rng = random.Random(0)
    assert all(in_level(random_twist_square(n, rng), 4) for n in (3, 4, 5, 6, 7) for _ in range(30))


def test_strata_flags():
    for w in sample_stratum("artin_squares", 5, 40, 1):
        r = membership_report(w)
        assert r.is_pure and r.in_level2 and r.in_level4 and r.in_pb_squared
    for w in sample_stratum("artin", 5, 40, 2):
        assert membership_report(w).is_pure
    # a single Artin generator times squares has an odd linking entry
    for w in sample_stratum("near_miss", 5, 40, 3):
        r = membership_report(w)
        assert r.in_level2 and not r.in_level4 and not r.in_pb_squared
    with pytest.raises(ValueError):
        sample_stratum("nope", 3, 1)


def test_corpus_is_deterministic():
    a = stratified_corpus(4, 20, 5, seed=9)
    b = stratified_corpus(4, 20, 5, seed=9)
    assert a == b and list(a) == list(STRATA)
    assert len(a["random"]) == 20 and all(len(a[s]) == 5 for s in STRATA[1:])


def test_cross_validate():
    rep = cross_validate(4, stratified_corpus(4, 300, 100, seed=1))
    assert rep.ok
    t = rep.totals()
    assert t.total == 700 and t.level4 == t.pb_squared and t.level2 == t.pure
    assert rep.to_dict()["n"] == 4
    seq = cross_validate(3, [artin_generator(1, 2, 3), BraidWord(3)])
    assert seq.ok and seq.strata["samples"].total == 2
    with pytest.raises(ValueError):
        cross_validate(3, [BraidWord(4)])
