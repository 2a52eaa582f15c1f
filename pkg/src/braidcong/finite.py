"""Exact enumeration of finite matrix groups over Z/m for m in {2, 4, 8}.

Each matrix is packed into 64-bit words (log2(m) bits per entry); the packed
words are the canonical key. A group is stored as the sorted array of keys of
its elements, and closures are computed by breadth-first search from the
identity with whole frontiers multiplied at once.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

log = logging.getLogger(__name__)

MODULI = {2: 1, 4: 2, 8: 3}


class ClosureLimitExceeded(RuntimeError):
    def __init__(self, limit: int, partial: int):
        super().__init__(f"closure exceeded {limit} elements (reached {partial})")
        self.limit = limit
        self.partial = partial


def _bits(m: int) -> int:
    try:
        return MODULI[m]
    except KeyError:
        raise ValueError(f"modulus must be one of {sorted(MODULI)}, got {m}") from None


@dataclass(frozen=True)
class Packing:
    dim: int
    modulus: int

    @property
    def bits(self) -> int:
        return _bits(self.modulus)

    @property
    def per_word(self) -> int:
        return 64 // self.bits

    @property
    def nwords(self) -> int:
        return -(-self.dim * self.dim // self.per_word)

    @property
    def dtype(self) -> np.dtype:
        if self.nwords == 1:
            return np.dtype(np.uint64)
        return np.dtype([(f"w{k}", np.uint64) for k in range(self.nwords)])

    def pack(self, mats: np.ndarray) -> np.ndarray:
        """(N, d, d) array of residues -> (N,) array of canonical keys."""
        flat = np.asarray(mats).reshape(-1, self.dim * self.dim).astype(np.uint64)
        N = flat.shape[0]
        words = np.zeros((N, self.nwords), dtype=np.uint64)
        b, per = np.uint64(self.bits), self.per_word
        for e in range(self.dim * self.dim):
            words[:, e // per] |= flat[:, e] << (b * np.uint64(e % per))
        if self.nwords == 1:
            return words[:, 0].copy()
        return np.ascontiguousarray(words).view(self.dtype).reshape(N)

    def unpack(self, keys: np.ndarray) -> np.ndarray:
        keys = np.asarray(keys, dtype=self.dtype).reshape(-1)
        if self.nwords == 1:
            words = keys.reshape(-1, 1)
        else:
            words = keys.view(np.uint64).reshape(-1, self.nwords)
        d, per = self.dim, self.per_word
        mask = np.uint64(self.modulus - 1)
        out = np.zeros((words.shape[0], d * d), dtype=np.uint8)
        for e in range(d * d):
            out[:, e] = (words[:, e // per] >> (np.uint64(self.bits) * np.uint64(e % per))) & mask
        return out.reshape(-1, d, d)


class ModMatrix:
    """A square matrix over Z/m with a canonical packed key."""

    __slots__ = ("entries", "modulus", "_key")

    def __init__(self, entries, modulus: int):
        _bits(modulus)
        arr = np.array(np.asarray(entries, dtype=object) % modulus, dtype=np.uint8)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("ModMatrix must be square")
        self.entries = arr
        self.entries.flags.writeable = False
        self.modulus = modulus
        self._key = None

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def packing(self) -> Packing:
        return Packing(self.dim, self.modulus)

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = self.packing.pack(self.entries[None]).tobytes()
        return self._key

    @classmethod
    def identity(cls, dim: int, modulus: int) -> "ModMatrix":
        return cls(np.eye(dim, dtype=np.int64), modulus)

    def __mul__(self, other: "ModMatrix") -> "ModMatrix":
        _check_compatible(self, other)
        prod = self.entries.astype(np.int64) @ other.entries.astype(np.int64)
        return ModMatrix(prod % self.modulus, self.modulus)

    def __eq__(self, other):
        return (isinstance(other, ModMatrix) and self.modulus == other.modulus
                and self.dim == other.dim and self.key == other.key)

    def __hash__(self):
        return hash((self.modulus, self.dim, self.key))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.entries, np.eye(self.dim, dtype=np.uint8)))

    def is_invertible(self) -> bool:
        # m is a power of 2, so invertibility is an odd determinant mod 2
        return _det_mod2(self.entries % 2) == 1

    def __repr__(self):
        return f"ModMatrix(mod {self.modulus}, {self.entries.tolist()})"


def _det_mod2(a: np.ndarray) -> int:
    a = (np.asarray(a, dtype=np.uint8) % 2).copy()
    n = a.shape[0]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r, c]), None)
        if piv is None:
            return 0
        a[[c, piv]] = a[[piv, c]]
        for r in range(c + 1, n):
            if a[r, c]:
                a[r] ^= a[c]
    return 1


def _check_compatible(a: ModMatrix, b: ModMatrix):
    if a.modulus != b.modulus or a.dim != b.dim:
        raise ValueError(f"incompatible matrices: {a.dim}x{a.dim} mod {a.modulus} "
                         f"vs {b.dim}x{b.dim} mod {b.modulus}")


@dataclass(frozen=True, eq=False)
class GroupClosure:
    gens: tuple[ModMatrix, ...]
    dim: int
    modulus: int
    keys: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return int(self.keys.shape[0])

    @property
    def packing(self) -> Packing:
        return Packing(self.dim, self.modulus)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, M: ModMatrix) -> bool:
        return group_query(self, M)

    def elements(self) -> np.ndarray:
        return self.packing.unpack(self.keys)

    def contains_keys(self, keys: np.ndarray) -> np.ndarray:
        return _member(self.keys, keys)


def _member(sorted_keys: np.ndarray, keys: np.ndarray) -> np.ndarray:
    if sorted_keys.shape[0] == 0:
        return np.zeros(keys.shape[0], dtype=bool)
    idx = np.searchsorted(sorted_keys, keys)
    idx[idx == sorted_keys.shape[0]] = 0
    return sorted_keys[idx] == keys


def _products(gen: np.ndarray, frontier: np.ndarray, m: int) -> np.ndarray:
    """gen @ F for every F in the frontier, as one BLAS product (entries stay exact in float64)."""
    N, d, _ = frontier.shape
    wide = frontier.transpose(1, 0, 2).reshape(d, N * d).astype(np.float64)
    prod = gen.astype(np.float64) @ wide
    return (np.rint(prod).astype(np.int64) % m).astype(np.uint8).reshape(d, N, d).transpose(1, 0, 2)


def closure(gens: Sequence[ModMatrix], limit: int = 1 << 22, workers: int = 1,
            chunk: int = 1 << 15) -> GroupClosure:
    """Exact subgroup generated by ``gens`` (breadth-first from the identity).

    Raises ClosureLimitExceeded once more than ``limit`` elements are found.
    The element set, and hence every derived quantity, does not depend on
    ``workers`` or on the order of the generators.
    """
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator (pass the identity for the trivial group)")
    dim, m = gens[0].dim, gens[0].modulus
    for g in gens:
        _check_compatible(gens[0], g)
        if not g.is_invertible():
            raise ValueError(f"generator is not invertible mod {m}: {g}")
    pk = Packing(dim, m)
    gen_arrs = [g.entries.astype(np.int64) for g in gens]
    frontier = np.eye(dim, dtype=np.uint8)[None]
    seen = pk.pack(frontier)
    pool = ThreadPoolExecutor(workers) if workers > 1 else None

    def expand(block: np.ndarray) -> np.ndarray:
        cands = np.concatenate([_products(g, block, m) for g in gen_arrs])
        keys = pk.pack(cands)
        keys, first = np.unique(keys, return_index=True)
        fresh = ~_member(seen, keys)
        return keys[fresh], cands[first[fresh]]

    try:
        level = 0
        while frontier.shape[0]:
            blocks = [frontier[i:i + chunk] for i in range(0, frontier.shape[0], chunk)]
            results = list(pool.map(expand, blocks)) if pool else [expand(b) for b in blocks]
            keys = np.concatenate([r[0] for r in results]) if results else np.empty(0, pk.dtype)
            mats = np.concatenate([r[1] for r in results]) if results else frontier[:0]
            keys, first = np.unique(keys, return_index=True)
            frontier = mats[first]
            seen = np.insert(seen, np.searchsorted(seen, keys), keys)
            level += 1
            log.debug("closure level %d: %d new, %d total", level, keys.shape[0], seen.shape[0])
            if seen.shape[0] > limit:
                raise ClosureLimitExceeded(limit, int(seen.shape[0]))
    finally:
        if pool:
            pool.shutdown()
    return GroupClosure(gens=gens, dim=dim, modulus=m, keys=seen)


def _compatible_groups(G: GroupClosure, H: GroupClosure):
    if G.dim != H.dim or G.modulus != H.modulus:
        raise ValueError("groups live in different matrix rings")


def group_query(G: GroupClosure, M: ModMatrix) -> bool:
    if M.dim != G.dim or M.modulus != G.modulus:
        raise ValueError("matrix does not match the group's dimension/modulus")
    return bool(_member(G.keys, G.packing.pack(M.entries[None]))[0])


def equals(G: GroupClosure, H: GroupClosure) -> bool:
    _compatible_groups(G, H)
    return G.order == H.order and bool(np.all(G.keys == H.keys))


def is_subgroup(H: GroupClosure, G: GroupClosure) -> bool:
    _compatible_groups(G, H)
    return bool(np.all(_member(G.keys, H.keys)))


def subgroup_index(G: GroupClosure, H: GroupClosure) -> int:
    """[G : H]; raises if H is not contained in G."""
    if not is_subgroup(H, G):
        raise ValueError("H is not a subgroup of G")
    q, r = divmod(G.order, H.order)
    if r:
        raise ArithmeticError(f"|H| = {H.order} does not divide |G| = {G.order}")
    return q


def level_kernel_order(g: int, parity: str = "odd") -> int:
    """2^C(2g+1, 2) (odd) or 2^C(2g+2, 2) (even): order of the level-2 groups mod 4."""
    if parity == "odd":
        k = 2 * g + 1
    elif parity == "even":
        k = 2 * g + 2
    else:
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    return 2 ** (k * (k - 1) // 2)


def from_int_matrices(mats, modulus: int) -> list[ModMatrix]:
    return [ModMatrix(M, modulus) for M in mats]
