"""Transvections, the mod 2 symplectic Lie algebra, and level-2 generating sets.

Vectors are integer columns in the ordered basis (x_1, y_1, ..., x_g, y_g),
with i(x_k, y_k) = 1. Basis symbols are written ``"x3"`` or ``("y", 2)``.
The star involution swaps x_k and y_k.
"""

from __future__ import annotations

import itertools
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .burau import standard_form

Symbol = tuple[str, int]


def symbol(s) -> Symbol:
    if isinstance(s, str):
        kind, k = s[0], int(s[1:])
    else:
        kind, k = s
    if kind not in ("x", "y") or k < 1:
        raise ValueError(f"bad basis symbol {s!r}")
    return kind, k


def index(s, g: int) -> int:
    kind, k = symbol(s)
    if k > g:
        raise ValueError(f"{kind}{k} is not a basis vector for genus {g}")
    return 2 * (k - 1) + (0 if kind == "x" else 1)


def star(s) -> Symbol:
    kind, k = symbol(s)
    return ("y" if kind == "x" else "x", k)


def basis_symbols(g: int) -> list[Symbol]:
    return [(kind, k) for k in range(1, g + 1) for kind in ("x", "y")]


def vec(g: int, **coeffs: int) -> np.ndarray:
    """vec(2, x1=1, y2=-1) -> x_1 - y_2 as an integer column."""
    v = np.zeros(2 * g, dtype=np.int64)
    for name, c in coeffs.items():
        v[index(name, g)] += c
    return v


def pairing(v: Sequence[int], w: Sequence[int]) -> int:
    v = np.asarray(v, dtype=np.int64)
    w = np.asarray(w, dtype=np.int64)
    return int(v @ _J(len(v)) @ w)


def _J(dim: int) -> np.ndarray:
    return standard_form(dim).astype(np.int64)


def is_symplectic(M: np.ndarray) -> bool:
    J = _J(M.shape[0])
    M = np.asarray(M, dtype=object)
    return np.array_equal(M.T.dot(J.astype(object)).dot(M), J.astype(object))


def transvection(v: Sequence[int], power: int = 1) -> np.ndarray:
    """Matrix of tau_v^power; tau_v(w) = w + i(w, v) v."""
    v = np.asarray(v, dtype=np.int64).reshape(-1, 1)
    dim = v.shape[0]
    return np.eye(dim, dtype=np.int64) - power * (v @ v.T @ _J(dim))


def N_matrix(v, g: int) -> np.ndarray:
    """Identity with the vv- and v*v*-entries negated."""
    M = np.eye(2 * g, dtype=np.int64)
    M[index(v, g), index(v, g)] = -1
    M[index(star(v), g), index(star(v), g)] = -1
    return M


def psi(M: np.ndarray) -> np.ndarray:
    """I + 2A -> A mod 2, for M congruent to I mod 2."""
    M = np.asarray(M, dtype=object)
    D = M - np.eye(M.shape[0], dtype=np.int64).astype(object)
    if any(int(x) % 2 for x in D.flat):
        raise ValueError("psi is only defined on matrices congruent to I mod 2")
    return np.array([[(int(x) // 2) % 2 for x in row] for row in D], dtype=np.uint8)


def is_lie_element(m: np.ndarray) -> bool:
    """m j = j m^T over Z/2."""
    j = (_J(m.shape[0]) % 2).astype(np.uint8)
    m = np.asarray(m, dtype=np.uint8) % 2
    return np.array_equal((m @ j) % 2, (j @ m.T) % 2)


def m_basis(v, w, g: int) -> np.ndarray:
    m = np.zeros((2 * g, 2 * g), dtype=np.uint8)
    m[index(v, g), index(w, g)] = 1
    m[index(star(w), g), index(star(v), g)] = 1
    return m


def M_lift(v, w, g: int) -> np.ndarray:
    """A level-2 symplectic matrix whose psi-image is m_vw."""
    v, w = symbol(v), symbol(w)
    if v == w:
        return N_matrix(v, g)
    bv = np.eye(2 * g, dtype=np.int64)[index(v, g)]
    if v == star(w):
        return transvection(bv, 2)
    bws = np.eye(2 * g, dtype=np.int64)[index(star(w), g)]
    return transvection(bws + bv, -2) @ transvection(bws, 2) @ transvection(bv, 2)


def omega(i: int, g: int) -> np.ndarray:
    """tau_{x_i}^2 tau_{y_i}^2 tau_{x_i - y_i}^2; negates x_i and y_i."""
    if not 1 <= i <= g:
        raise ValueError(f"need 1 <= i <= g, got i={i}, g={g}")
    x = vec(g, **{f"x{i}": 1})
    y = vec(g, **{f"y{i}": 1})
    return transvection(x, 2) @ transvection(y, 2) @ transvection(x - y, 2)


def all_m_basis(g: int) -> list[np.ndarray]:
    syms = basis_symbols(g)
    return [m_basis(v, w, g) for v in syms for w in syms]


def ann_generators(g: int) -> list[np.ndarray]:
    """Generators of Ann(y_{g+1}) inside sp_{2g+2}(Z/2)."""
    G = g + 1
    syms = basis_symbols(G)
    out = []
    seen = set()
    for v in syms:
        if v == ("x", G):
            continue
        for w in syms:
            if w == ("y", G):
                continue
            m = m_basis(v, w, G)
            key = m.tobytes()
            if key not in seen:
                seen.add(key)
                out.append(m)
    return out


def gf2_rank(mats: Iterable[np.ndarray]) -> int:
    """Rank over Z/2 of the span of the given 0/1 arrays."""
    rows = []
    for m in mats:
        bits = np.asarray(m, dtype=np.uint8).ravel() % 2
        rows.append(int("".join(map(str, bits)) or "0", 2))
    rank = 0
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def _e(g: int, kind: str, k: int) -> np.ndarray:
    return np.eye(2 * g, dtype=np.int64)[index((kind, k), g)]


def generating_sets(g: int, parity: str = "odd") -> list[np.ndarray]:
    """Vectors whose squared transvections generate the level-2 group.

    ``"odd"``: Sp_2g(Z)[2] in dimension 2g. ``"even"``: the stabilizer of
    y_{g+1} in Sp_{2g+2}(Z)[2], in dimension 2g+2.
    """
    if g < 2:
        raise ValueError("generating sets are stated for g >= 2")
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    if parity == "odd":
        G, xs, ys = g, range(1, g + 1), range(1, g + 1)
    else:
        G, xs, ys = g + 1, range(1, g + 1), range(1, g + 2)
    x = lambda k: _e(G, "x", k)  # noqa: E731
    y = lambda k: _e(G, "y", k)  # noqa: E731
    out = [x(i) for i in xs]
    out += [y(j) for j in ys]
    out += [x(i) + x(j) for i, j in itertools.combinations(xs, 2)]
    out += [y(i) - y(j) for i, j in itertools.combinations(ys, 2)]
    out += [x(i) - y(j) for i in xs for j in ys]
    return out


def mumford_gens(g: int) -> list[np.ndarray]:
    """The symplectic basis together with all sums of two distinct basis vectors."""
    basis = [np.eye(2 * g, dtype=np.int64)[k] for k in range(2 * g)]
    return basis + [u + w for u, w in itertools.combinations(basis, 2)]


def primitive_vectors(g: int, bound: int) -> list[np.ndarray]:
    """Primitive vectors with entries in [-bound, bound], one of each pair +-v."""
    out = []
    for coords in itertools.product(range(-bound, bound + 1), repeat=2 * g):
        nz = [c for c in coords if c]
        if not nz or nz[0] < 0:
            continue
        d = 0
        for c in nz:
            d = gcd(d, c)
        if d == 1:
            out.append(np.array(coords, dtype=np.int64))
    return out
