"""Verification checks over finite quotients, collected into a JSON report.

Every check records what it computed next to the expected value and where
that value comes from (``STATED``: a published result, ``DERIVED``: an
independent computation or arithmetic consequence, ``TRIVIAL``).
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Any, Callable

import numpy as np

from . import freegroup
from .braid import (BraidWord, artin_generator, brunnian_sample, commutator, delete_strand,
                    delete_strands, interval_twist, invert, is_pure, is_trivial,
                    linking_numbers, pair_generators, push_generator, random_word, same_braid)
from .burau import burau_at, integral_burau, rho_symplectic, symplectize
from .finite import (ClosureLimitExceeded, ModMatrix, closure, equals, group_query,
                     is_subgroup, level_kernel_order, subgroup_index)
from .oracles import (cross_validate, in_level, random_level4_word, random_twist_square,
                      stratified_corpus)
from .symplectic import (M_lift, all_m_basis, basis_symbols, generating_sets, is_symplectic,
                         m_basis, mumford_gens, omega, primitive_vectors, psi, star,
                         transvection, vec)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckRecord:
    check: str
    statement: str
    status: str
    computed: Any
    expected: Any
    provenance: str
    millis: int = 0

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "check": self.check,
            "statement": self.statement,
            "status": self.status,
            "computed": self.computed,
            "expected": self.expected,
            "provenance": self.provenance,
        }
        if timing:
            d["millis"] = self.millis
        return d


@dataclass
class SuiteConfig:
    seed: int = 0
    heavy: bool = False
    workers: int = 1
    n_values: tuple[int, ...] = (3, 4, 5, 6, 7)
    g: int = 2
    forgetful_n: int = 5
    forgetful_k: int = 3
    random_words: int = 10_000
    per_stratum: int = 1_000
    twist_squares: int = 1_000
    brunnian_samples: int = 100
    forgetful_samples: int = 200
    homomorphism_pairs: int = 1_000
    symplectic_words: int = 500
    mennicke_bound: int = 2
    # check name -> replacement expected value (used to exercise failure reporting)
    overrides: dict[str, Any] = field(default_factory=dict)

    def expect(self, name: str, value):
        return self.overrides.get(name, value)


@dataclass
class SuiteReport:
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == PASS for r in self.records if r.status != SKIPPED)

    @property
    def skipped(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == SKIPPED]

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def exit_code(self, strict: bool = False) -> int:
        if not self.passed:
            return 1
        if strict and self.skipped:
            return 3
        return 0

    def to_json(self, timing: bool = True) -> str:
        body = {
            "status": PASS if self.passed else FAIL,
            "checks": [r.to_dict(timing) for r in self.records],
        }
        return json.dumps(body, indent=2, sort_keys=False, default=_jsonable)

    def render(self) -> str:
        lines = []
        for r in self.records:
            lines.append(f"[{r.status.upper():7}] {r.check}: computed={_short(r.computed)} "
                         f"expected={_short(r.expected)} ({r.provenance}, {r.millis} ms)")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _short(v, width: int = 80) -> str:
    s = json.dumps(v, default=_jsonable)
    return s if len(s) <= width else s[: width - 3] + "..."


def _jsonable(v):
    if isinstance(v, np.ndarray):
        return [[str(x) for x in row] for row in v.tolist()] if v.ndim == 2 else v.tolist()
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.bool_,)):
        return bool(v)
    raise TypeError(f"not serializable: {type(v)}")


def matrix_json(M) -> list[list[str]]:
    """Row-major decimal strings, exact for arbitrarily large entries."""
    return [[str(int(x)) for x in row] for row in np.asarray(M, dtype=object)]


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.millis = int(round(1000 * (time.perf_counter() - self.t0)))


def _record(name, statement, computed, expected, provenance, timer=None) -> CheckRecord:
    status = PASS if computed == expected else FAIL
    return CheckRecord(name, statement, status, computed, expected, provenance,
                       timer.millis if timer else 0)


def _closure_record(name, statement, build: Callable, expected, provenance, cfg: SuiteConfig):
    """Run a closure; a limit overflow becomes a skipped record with the partial count."""
    with _Timer() as t:
        try:
            G = build()
            computed = G.order
        except ClosureLimitExceeded as exc:
            G, computed = None, None
            partial = exc.partial
    if G is None:
        rec = CheckRecord(name, statement, SKIPPED, {"partial": partial}, expected, provenance, t.millis)
    else:
        rec = _record(name, statement, computed, cfg.expect(name, expected), provenance, t)
    return G, rec


# -- generator matrices --------------------------------------------------------

def artin_images(n: int, m: int, variant: int = 0) -> list[ModMatrix]:
    ctx = symplectize(n, variant)
    return [ModMatrix(rho_symplectic(artin_generator(i, j, n), ctx), m) for i, j in pair_generators(n)]


def sigma_images(n: int, m: int) -> list[ModMatrix]:
    ctx = symplectize(n)
    return [ModMatrix(rho_symplectic(BraidWord(n, (i,)), ctx), m) for i in range(1, n)]


def push_images(n: int, m: int) -> list[ModMatrix]:
    ctx = symplectize(n)
    return [ModMatrix(rho_symplectic(push_generator(j, n), ctx), m) for j in range(2, n + 1)]


def transvection_squares(vectors, m: int, power: int = 2) -> list[ModMatrix]:
    return [ModMatrix(transvection(v, power), m) for v in vectors]


# -- relations -------------------------------------------------------------------

def verify_squared_lantern(cfg: SuiteConfig | None = None) -> list[CheckRecord]:
    cfg = cfg or SuiteConfig()
    a12, a13, a23 = (artin_generator(i, j, 3) for i, j in ((1, 2), (1, 3), (2, 3)))
    lhs = commutator(a12, a13)
    rhs = (a12 ** 2) * (a13 ** 2).conj(a12) * (a23 ** 2) * ((a13 * a12 * a23) ** -2)
    statement = "[a12,a13] = a12^2 (a12^-1 a13^2 a12) a23^2 (a13 a12 a23)^-2 in B_3"
    out = []
    with _Timer() as t:
        trivial = is_trivial(lhs * invert(rhs))
    out.append(_record("relations.squared_lantern.word_problem", statement, trivial,
                       cfg.expect("relations.squared_lantern.word_problem", True), "STATED", t))
    with _Timer() as t:
        equal = bool(np.array_equal(integral_burau(lhs), integral_burau(rhs)))
    out.append(_record("relations.squared_lantern.burau_equal", statement, equal,
                       cfg.expect("relations.squared_lantern.burau_equal", True), "DERIVED", t))
    with _Timer() as t:
        lk = {"lhs": linking_numbers(lhs).tolist(), "rhs": linking_numbers(rhs).tolist()}
        rhs_even = bool(np.all(np.array(lk["rhs"]) % 2 == 0))
        computed = {"lhs_zero": not np.any(lk["lhs"]), "rhs_even": rhs_even,
                    "equal": lk["lhs"] == lk["rhs"]}
    out.append(_record("relations.squared_lantern.linking", "both sides have equal linking matrices",
                       computed, cfg.expect("relations.squared_lantern.linking",
                                            {"lhs_zero": True, "rhs_even": True, "equal": True}),
                       "DERIVED", t))
    with _Timer() as t:
        lvl = [in_level(lhs, 4), in_level(rhs, 4)]
    out.append(_record("relations.squared_lantern.level4", "both sides are level 4", lvl,
                       cfg.expect("relations.squared_lantern.level4", [True, True]), "DERIVED", t))
    return out


def witt_hall_holds(x, y, z) -> bool:
    """[xy, z] = x [y, z] x^-1 [x, z] as reduced free words."""
    x, y, z = (freegroup.reduce_word(u) for u in (x, y, z))
    left = freegroup.commutator(freegroup.concat(x, y), z)
    right = freegroup.concat(x, freegroup.commutator(y, z), freegroup.free_inverse(x),
                             freegroup.commutator(x, z))
    return left == right


def verify_comm_relation(cfg: SuiteConfig | None = None) -> list[CheckRecord]:
    cfg = cfg or SuiteConfig()
    A = lambda i, j: artin_generator(i, j, 4)  # noqa: E731
    lhs = commutator(A(1, 3), A(2, 4))
    x = A(1, 3) * invert(A(2, 3))
    rhs = commutator(A(2, 3), A(2, 4)).conj(invert(x)) * commutator(A(2, 4), A(2, 3)).conj(A(2, 3))
    statement = "[a13,a24] = (a13 a23^-1)[a23,a24](a13 a23^-1)^-1 a23^-1[a24,a23]a23 in B_4"
    out = []
    with _Timer() as t:
        trivial = is_trivial(lhs * invert(rhs))
    out.append(_record("relations.commutator.word_problem", statement, trivial,
                       cfg.expect("relations.commutator.word_problem", True), "STATED", t))
    with _Timer() as t:
        lk_equal = is_pure(lhs) and is_pure(rhs) and \
            linking_numbers(lhs).tolist() == linking_numbers(rhs).tolist()
    out.append(_record("relations.commutator.linking", "both sides pure with equal linking",
                       lk_equal, cfg.expect("relations.commutator.linking", True), "DERIVED", t))
    rng = random.Random(cfg.seed)
    with _Timer() as t:
        fails = 0
        for _ in range(100):
            x, y, z = (freegroup.reduce_word(rng.choice((1, -1)) * rng.randint(1, 3)
                                             for _ in range(rng.randint(0, 8))) for _ in range(3))
            fails += not witt_hall_holds(x, y, z)
    out.append(_record("relations.witt_hall", "[xy,z] = x[y,z]x^-1[x,z] on 100 random substitutions",
                       fails, cfg.expect("relations.witt_hall", 0), "TRIVIAL", t))
    return out


def verify_symplectic_identities(cfg: SuiteConfig | None = None) -> list[CheckRecord]:
    cfg = cfg or SuiteConfig()
    out = []
    with _Timer() as t:
        ok = bool(np.array_equal(omega(1, 1), -np.eye(2, dtype=np.int64)))
    out.append(_record("symplectic.omega_g1", "omega_1 = -I for g = 1", ok,
                       cfg.expect("symplectic.omega_g1", True), "DERIVED", t))
    with _Timer() as t:
        bad = 0
        for g in (1, 2, 3):
            for i in range(1, g + 1):
                expected = np.eye(2 * g, dtype=np.int64)
                expected[2 * i - 2, 2 * i - 2] = expected[2 * i - 1, 2 * i - 1] = -1
                bad += not np.array_equal(omega(i, g), expected)
    out.append(_record("symplectic.omega_negates", "omega_i negates exactly x_i, y_i (g <= 3)",
                       bad, cfg.expect("symplectic.omega_negates", 0), "STATED", t))
    with _Timer() as t:
        bad = 0
        for g in (2, 3):
            for i in range(1, g + 1):
                x, y = vec(g, **{f"x{i}": 1}), vec(g, **{f"y{i}": 1})
                conj = transvection(x, 2) @ transvection(x + y, 2) @ transvection(x, -2)
                bad += not np.array_equal(conj, transvection(x - y, 2))
                for j in range(1, g + 1):
                    if j == i:
                        continue
                    yj = vec(g, **{f"y{j}": 1})
                    w = omega(j, g)  # an involution, so it is its own inverse
                    bad += not np.array_equal(w @ transvection(y + yj, 2) @ w, transvection(y - yj, 2))
                    bad += not np.array_equal(w @ transvection(x + yj, 2) @ w, transvection(x - yj, 2))
    out.append(_record("symplectic.conjugation_identities",
                       "transvection-square conjugation identities (g = 2, 3)", bad,
                       cfg.expect("symplectic.conjugation_identities", 0), "STATED", t))
    with _Timer() as t:
        bad = 0
        for g in (1, 2, 3):
            syms = basis_symbols(g)
            for v, w in itertools.product(syms, syms):
                L = M_lift(v, w, g)
                bad += not (is_symplectic(L) and np.array_equal(psi(L), m_basis(v, w, g)))
                bad += not np.array_equal(m_basis(v, w, g), m_basis(star(w), star(v), g))
    out.append(_record("symplectic.psi_lifts", "psi(M_vw) = m_vw and m_vw = m_w*v* (g <= 3)",
                       bad, cfg.expect("symplectic.psi_lifts", 0), "STATED", t))
    with _Timer() as t:
        from .symplectic import ann_generators, gf2_rank
        dims = {g: [gf2_rank(all_m_basis(g)), gf2_rank(ann_generators(g))] for g in (1, 2, 3)}
        expected = {g: [g * (2 * g + 1), comb(2 * g + 2, 2)] for g in (1, 2, 3)}
    out.append(_record("symplectic.lie_dimensions", "dim sp_2g(Z/2) and dim Ann(y_{g+1})",
                       dims, cfg.expect("symplectic.lie_dimensions", expected), "STATED", t))
    return out


# -- representation sanity ----------------------------------------------------

def verify_representation(cfg: SuiteConfig | None = None) -> list[CheckRecord]:
    cfg = cfg or SuiteConfig()
    rng = random.Random(cfg.seed)
    out = []
    with _Timer() as t:
        bad = 0
        for k in range(cfg.homomorphism_pairs):
            n = 3 + k % 6
            u = random_word(n, rng.randint(0, 12), rng)
            v = random_word(n, rng.randint(0, 12), rng)
            Ru, Rv, Ruv = integral_burau(u), integral_burau(v), integral_burau(u * v)
            ones = np.ones(n, dtype=np.int64).astype(object)
            bad += not np.array_equal(Ruv, Ru.dot(Rv))
            bad += not np.array_equal(Ruv.dot(ones), ones)
    out.append(_record("burau.homomorphism_fixed_vector",
                       f"rho(uv) = rho(u)rho(v) and rho(w)(1..1) = (1..1), {cfg.homomorphism_pairs} pairs, n = 3..8",
                       bad, cfg.expect("burau.homomorphism_fixed_vector", 0), "TRIVIAL", t))
    with _Timer() as t:
        bad = 0
        for n in range(3, 9):
            ctx = symplectize(n)
            for _ in range(cfg.symplectic_words // 6 + 1):
                w = random_word(n, rng.randint(0, 20), rng)
                M = rho_symplectic(w, ctx)
                bad += not np.array_equal(M.T.dot(ctx.J).dot(M), ctx.J)
                if ctx.y_last is not None:
                    bad += not np.array_equal(M.dot(ctx.y_last), ctx.y_last)
    out.append(_record("burau.symplectization", "M^T J M = J on random words; even n fixes y_{g+1}",
                       bad, cfg.expect("burau.symplectization", 0), "TRIVIAL", t))
    return out


# -- level equivalences -----------------------------------------------------------

def verify_main(cfg: SuiteConfig | None = None) -> list[CheckRecord]:
    cfg = cfg or SuiteConfig()
    out = []
    for n in cfg.n_values:
        with _Timer() as t:
            corpus = stratified_corpus(n, cfg.random_words, cfg.per_stratum, cfg.seed * 1000 + n)
            rep = cross_validate(n, corpus)
            totals = rep.totals()
        out.append(_record(f"main.level2.n{n}", "level 2 <=> pure",
                           len(rep.level2_counterexamples) + len(rep.inconsistent),
                           cfg.expect(f"main.level2.n{n}", 0), "STATED", t))
        computed = {"counterexamples": len(rep.level4_counterexamples),
                    "enough_positives": totals.level4 >= min(1000, cfg.per_stratum),
                    "enough_negatives": totals.total - totals.level4 >= min(1000, cfg.per_stratum)}
        out.append(_record(f"main.level4.n{n}", "level 4 <=> PB_n^2", computed,
                           cfg.expect(f"main.level4.n{n}", {"counterexamples": 0, "enough_positives": True,
                                                            "enough_negatives": True}), "STATED", t))
    rng = random.Random(cfg.seed)
    with _Timer() as t:
        bad = 0
        for k in range(cfg.twist_squares):
            n = cfg.n_values[k % len(cfg.n_values)]
            bad += not in_level(random_twist_square(n, rng), 4)
    out.append(_record("main.twist_squares", f"{cfg.twist_squares} conjugated twist squares are level 4",
                       bad, cfg.expect("main.twist_squares", 0), "STATED", t))
    return out


# -- generator closures -----------------------------------------------------------

def verify_generator_closures(cfg: SuiteConfig | None = None) -> list[CheckRecord]:
    cfg = cfg or SuiteConfig()
    w, out, g = cfg.workers, [], cfg.g
    pb_groups = {}
    pure_ns = sorted({3, 4, 5, 6, 2 * g + 1, 2 * g + 2} | ({7} if cfg.heavy else set()))
    for n in pure_ns:
        G, rec = _closure_record(f"closures.pure.n{n}", "|<rho(a_ij)> mod 4| = 2^C(n,2)",
                                 lambda: closure(artin_images(n, 4), workers=w),
                                 2 ** comb(n, 2), "DERIVED", cfg)
        pb_groups[n] = G
        out.append(rec)
    for n in (3, 4, 5, 6):
        _, rec = _closure_record(f"closures.full.mod2.n{n}", "|<rho(sigma_i)> mod 2| = n!",
                                 lambda: closure(sigma_images(n, 2), workers=w),
                                 factorial(n), "DERIVED", cfg)
        out.append(rec)
    for n in (3, 4, 5) + ((6,) if cfg.heavy else ()):
        _, rec = _closure_record(f"closures.full.mod4.n{n}", "|<rho(sigma_i)> mod 4| = 2^C(n,2) n!",
                                 lambda: closure(sigma_images(n, 4), limit=1 << 25, workers=w),
                                 2 ** comb(n, 2) * factorial(n), "DERIVED", cfg)
        out.append(rec)
    prop, rec = _closure_record(f"closures.prop_set.odd.g{g}", "squares of the odd generating set, mod 4",
                                lambda: closure(transvection_squares(generating_sets(g, "odd"), 4), workers=w),
                                level_kernel_order(g, "odd"), "STATED", cfg)
    out.append(rec)
    mum, rec = _closure_record(f"closures.mumford.g{g}", "squares of basis vectors and pairwise sums, mod 4",
                               lambda: closure(transvection_squares(mumford_gens(g), 4), workers=w),
                               level_kernel_order(g, "odd"), "STATED", cfg)
    out.append(rec)
    if prop is not None and mum is not None:
        with _Timer() as t:
            same = equals(prop, mum)
        out.append(_record("closures.prop_equals_mumford", "both generating sets give the same group mod 4",
                           same, cfg.expect("closures.prop_equals_mumford", True), "STATED", t))
    n_odd, n_even = 2 * g + 1, 2 * g + 2
    if prop is not None and pb_groups.get(n_odd) is not None:
        with _Timer() as t:
            same = equals(prop, pb_groups[n_odd])
        name = f"closures.surjective.odd.n{n_odd}"
        out.append(_record(name, f"rho(PB_{n_odd}) fills Sp_{2 * g}(Z)[2] mod 4",
                           same, cfg.expect(name, True), "STATED", t))
    with _Timer() as t:
        vecs = generating_sets(g, "odd")
        orders = sorted({closure(transvection_squares(vecs[:k] + vecs[k + 1:], 4), workers=w).order
                         for k in range(len(vecs))})
    name = f"closures.minimality.g{g}"
    out.append(_record(name, f"every {len(vecs) - 1}-element subset closes to an index-2 subgroup",
                       orders, cfg.expect(name, [level_kernel_order(g, "odd") // 2]), "STATED", t))
    even, rec = _closure_record(f"closures.prop_set.even.g{g}", "squares of the even generating set, mod 4",
                                lambda: closure(transvection_squares(generating_sets(g, "even"), 4), workers=w),
                                level_kernel_order(g, "even"), "STATED", cfg)
    out.append(rec)
    if even is not None and pb_groups.get(n_even) is not None:
        with _Timer() as t:
            same = equals(even, pb_groups[n_even])
        name = f"closures.surjective.even.n{n_even}"
        out.append(_record(name, f"rho(PB_{n_even}) fills the y_{g + 1}-stabilizer mod 4",
                           same, cfg.expect(name, True), "STATED", t))
    return out


# -- point pushing and Brunnian braids -------------------------------------------

_CERT_PRIME = (1 << 61) - 1


def certainly_nontrivial(w: BraidWord) -> bool:
    """Nontriviality via the Burau image at t = 2 mod a prime, then the word problem."""
    if not np.array_equal(burau_at(w, 2, _CERT_PRIME), np.eye(w.strands, dtype=np.int64)):
        return True
    return not is_trivial(w)


def in_br(w: BraidWord, k: int) -> bool:
    """w lies in the intersection of the first k point-pushing subgroups."""
    return is_pure(w) and all(is_trivial(delete_strand(w, i)) for i in range(1, k + 1))


def verify_pointpushing_brunnian(cfg: SuiteConfig | None = None, n: int | None = None) -> list[CheckRecord]:
    cfg = cfg or SuiteConfig()
    n = n or 2 * cfg.g + 1
    if n % 2 == 0 or n < 3:
        raise ValueError("point-pushing checks need an odd n >= 3")
    g = (n - 1) // 2
    w, out = cfg.workers, []
    push4, rec = _closure_record("pointpush.k1.order_mod4", "|rho(Br_{n,1}) mod 4| = 2^{2g}",
                                 lambda: closure(push_images(n, 4), workers=w), 2 ** (2 * g), "STATED", cfg)
    out.append(rec)
    pb4, rec = _closure_record("pointpush.pb.order_mod4", "|rho(PB_n) mod 4|",
                               lambda: closure(artin_images(n, 4), workers=w), 2 ** comb(n, 2), "DERIVED", cfg)
    out.append(rec)
    if push4 is not None and pb4 is not None:
        with _Timer() as t:
            index = subgroup_index(pb4, push4)
        displayed = 2 ** (g * (2 * g + 1)) - 2 ** (2 * g)
        rec = _record("pointpush.k1.index", "[rho(PB_n) : rho(Br_{n,1})] mod 4", index,
                      cfg.expect("pointpush.k1.index", 2 ** (g * (2 * g + 1) - 2 * g)), "DERIVED", t)
        # the closed form 2^{g(2g+1)} - 2^{2g} is not a power of 2; reported, not asserted
        rec.computed = {"index": index, "flagged_closed_form": displayed,
                        "closed_form_matches": displayed == index}
        rec.expected = {"index": rec.expected, "flagged_closed_form": displayed,
                        "closed_form_matches": False}
        rec.status = PASS if rec.computed == rec.expected else FAIL
        out.append(rec)
    with _Timer() as t:
        a12 = artin_generator(1, 2, n)
        in_k2 = in_br(a12, 2)
        order = closure([ModMatrix(rho_symplectic(a12, symplectize(n)), 4)]).order
    out.append(_record("pointpush.k2.lower_bound", "a_12 lies in Br_{n,2} and has image of order 2 mod 4",
                       {"a12_in_Br2": in_k2, "order": order},
                       cfg.expect("pointpush.k2.lower_bound", {"a12_in_Br2": True, "order": 2}), "STATED", t))
    with _Timer() as t:
        bad = 0
        for i, j in pair_generators(n):
            for k in range(1, n + 1):
                bad += in_br(artin_generator(i, j, n), k) != set(range(1, k + 1)).issubset({i, j})
    out.append(_record("pointpush.artin_membership", "a_ij in Br_{n,k} iff {1..k} within {i,j}", bad,
                       cfg.expect("pointpush.artin_membership", 0), "STATED", t))
    with _Timer() as t:
        samples = {m: [brunnian_sample(m, cfg.seed * 10_000 + s) for s in range(cfg.brunnian_samples)]
                   for m in (4, 5)}
        bad_level = sum(not in_level(b, 4) for bs in samples.values() for b in bs)
        bad_brun = sum(not (in_br(b, b.strands) and certainly_nontrivial(b))
                       for bs in samples.values() for b in bs)
    out.append(_record("brunnian.level4", f"{cfg.brunnian_samples} Brunnian samples (n = 4, 5) are level 4 "
                       "and die under every strand deletion",
                       {"not_level4": bad_level, "not_brunnian": bad_brun},
                       cfg.expect("brunnian.level4", {"not_level4": 0, "not_brunnian": 0}), "STATED", t))
    vecs = primitive_vectors(g, cfg.mennicke_bound)
    menn, rec = _closure_record("mennicke.mod8.order", f"<tau_v^4 : v primitive, |v_i| <= {cfg.mennicke_bound}> mod 8",
                                lambda: closure(transvection_squares(vecs, 8, power=4), workers=w),
                                2 ** (g * (2 * g + 1)), "DERIVED", cfg)
    rec.computed = {"order": rec.computed, "bound": cfg.mennicke_bound, "generators": len(vecs)}
    rec.expected = {"order": rec.expected, "bound": cfg.mennicke_bound, "generators": len(vecs)}
    out.append(rec)
    if menn is not None:
        with _Timer() as t:
            ctx = symplectize(n)
            outside = sum(not group_query(menn, ModMatrix(rho_symplectic(b, ctx), 8)) for b in samples[n])
        out.append(_record("mennicke.absorbs_brunnian", "every Brunnian sample lies in the Mennicke group mod 8",
                           outside, cfg.expect("mennicke.absorbs_brunnian", 0), "STATED", t))
    push8, rec = _closure_record("pointpush.k1.order_mod8", "|rho(Br_{n,1}) mod 8| = 2^{g(2g+1)+2g}",
                                 lambda: closure(push_images(n, 8), workers=w),
                                 2 ** (g * (2 * g + 1) + 2 * g), "DERIVED", cfg)
    out.append(rec)
    if push8 is not None and menn is not None:
        with _Timer() as t:
            contained = is_subgroup(menn, push8)
            index = subgroup_index(push8, menn) if contained else None
        out.append(_record("pointpush.k1.contains_level4_mod8", "rho(Br_{n,1}) mod 8 contains the level-4 group",
                           {"contained": contained, "index": index},
                           cfg.expect("pointpush.k1.contains_level4_mod8",
                                      {"contained": True, "index": 2 ** (2 * g)}), "STATED", t))
    return out


# -- forgetful maps -------------------------------------------------------------

def lift_twist(a: int, b: int, k: int, n: int) -> BraidWord:
    """A twist in B_n about a curve with an odd number of points that forgets to T_[a,b] in B_k.

    When [a, b] holds an even number of points, the deleted point k+1 is
    carried next to b and included in the curve.
    """
    if (b - a + 1) % 2 == 1:
        return interval_twist(a, b, n)
    if k >= n:
        raise ValueError("no strand left to remember")
    carry = BraidWord(n, tuple(range(k, b, -1)))
    return interval_twist(a, b + 1, n).conj(invert(carry))


def verify_forgetful_corollary(cfg: SuiteConfig | None = None, n: int | None = None,
                               k: int | None = None) -> list[CheckRecord]:
    cfg = cfg or SuiteConfig()
    n = n or cfg.forgetful_n
    k = k or cfg.forgetful_k
    if not k < n:
        raise ValueError("need k < n")
    rng = random.Random(cfg.seed)
    out = []
    with _Timer() as t:
        samples = []
        while len(samples) < cfg.forgetful_samples:
            w = random_level4_word(n, rng)
            if in_level(w, 4):
                samples.append(w)
        bad = 0
        for w in samples:
            for dropped in itertools.combinations(range(1, n + 1), n - k):
                bad += not in_level(delete_strands(w, dropped), 4)
    out.append(_record(f"forgetful.level4.n{n}k{k}",
                       f"{cfg.forgetful_samples} level-4 braids stay level 4 under every deletion to {k} strands",
                       bad, cfg.expect(f"forgetful.level4.n{n}k{k}", 0), "STATED", t))
    with _Timer() as t:
        results = {}
        for a, b in itertools.combinations(range(1, k + 1), 2):
            lift = lift_twist(a, b, k, n) ** 2
            target = interval_twist(a, b, k) ** 2
            image = delete_strands(lift, range(k + 1, n + 1))
            results[f"{a}-{b}"] = {
                "maps_to_target": same_braid(image, target),
                "lift_level4": in_level(lift, 4),
                "lift_in_burau_kernel": bool(np.array_equal(integral_burau(lift),
                                                            np.eye(n, dtype=np.int64).astype(object))),
            }
        computed = all(all(v.values()) for v in results.values())
    rec = _record(f"forgetful.witnesses.n{n}k{k}", "every round twist square in B_k has a preimage in the Burau kernel",
                  computed, cfg.expect(f"forgetful.witnesses.n{n}k{k}", True), "STATED", t)
    rec.computed = {"all": computed, "curves": results}
    rec.expected = {"all": rec.expected, "curves": {c: {"maps_to_target": True, "lift_level4": True,
                                                          "lift_in_burau_kernel": True} for c in results}}
    rec.status = PASS if rec.computed == rec.expected else FAIL
    out.append(rec)
    with _Timer() as t:
        ident = is_trivial(delete_strand(BraidWord(n), n))
    out.append(_record("forgetful.identity", "forgetting a strand of the identity gives the identity",
                       ident, cfg.expect("forgetful.identity", True), "TRIVIAL", t))
    return out


GROUPS: dict[str, list[Callable[[SuiteConfig], list[CheckRecord]]]] = {
    "relations": [verify_squared_lantern, verify_comm_relation, verify_symplectic_identities],
    "generators": [verify_generator_closures],
    "main": [verify_representation, verify_main],
    "pointpush": [verify_pointpushing_brunnian],
    "forgetful": [verify_forgetful_corollary],
}


def run_suite(cfg: SuiteConfig | None = None, groups=("all",)) -> SuiteReport:
    cfg = cfg or SuiteConfig()
    names = list(GROUPS) if "all" in groups else list(groups)
    report = SuiteReport()
    for name in names:
        if name not in GROUPS:
            raise KeyError(f"unknown check group {name!r}; choose from {sorted(GROUPS)} or 'all'")
        for check in GROUPS[name]:
            report.records.extend(check(cfg))
    return report
