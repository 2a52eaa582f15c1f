"""Unreduced Burau representation, its specialization at t = -1, and symplectic coordinates.

Matrices act on column vectors and a word's image is the product of its
letters' images in word order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import intlinalg as il
from .braid import BraidWord
from .laurent import ONE, T, ZERO, LaurentMatrix, LaurentPoly

__all__ = [
    "SympContext",
    "SymplectizationError",
    "burau_at",
    "burau_generator",
    "burau_unreduced",
    "integral_burau",
    "integral_burau_mod",
    "integral_generator",
    "rho_symplectic",
    "rho_symplectic_mod",
    "standard_form",
    "symplectize",
]

T_INV = LaurentPoly.monomial(1, -1)


class SymplectizationError(RuntimeError):
    """The invariant-form computation did not produce a unimodular symplectic lattice."""


def burau_generator(i: int, n: int, sign: int = 1) -> LaurentMatrix:
    """I_{i-1} + [[1-t, t], [1, 0]] + I_{n-i-1}, or its inverse for sign = -1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator {i} out of range for {n} strands")
    M = LaurentMatrix.identity(n)
    a = i - 1
    if sign > 0:
        block = [[ONE - T, T], [ONE, ZERO]]
    else:
        block = [[ZERO, ONE], [T_INV, ONE - T_INV]]
    for r in range(2):
        for c in range(2):
            M.rows[a + r][a + c] = block[r][c]
    return M


def burau_unreduced(w: BraidWord) -> LaurentMatrix:
    M = LaurentMatrix.identity(w.strands)
    for a in w.letters:
        M = M @ burau_generator(abs(a), w.strands, 1 if a > 0 else -1)
    return M


def burau_at(w: BraidWord, t: int, p: int) -> np.ndarray:
    """Unreduced Burau matrix at an integer t, reduced mod a prime p not dividing t.

    A homomorphism of B_n, so a non-identity result certifies that w is a
    nontrivial braid without solving the word problem.
    """
    n = w.strands
    t_inv = pow(t, -1, p)
    M = il.identity(n)
    for a in w.letters:
        i = abs(a) - 1
        G = il.identity(n)
        if a > 0:
            G[i, i], G[i, i + 1], G[i + 1, i], G[i + 1, i + 1] = (1 - t) % p, t, 1, 0
        else:
            G[i, i], G[i, i + 1], G[i + 1, i], G[i + 1, i + 1] = 0, 1, t_inv, (1 - t_inv) % p
        M = M.dot(G) % p
    return M


@lru_cache(maxsize=None)
def _int_generators(n: int) -> tuple[np.ndarray, ...]:
    """Index k holds rho(sigma_k) for k > 0 and rho(sigma_|k|^-1) for k < 0 (slot 0 unused)."""
    out = [None] * (2 * n - 1)
    for i in range(1, n):
        M = il.identity(n)
        M[i - 1, i - 1], M[i - 1, i], M[i, i - 1], M[i, i] = 2, -1, 1, 0
        Minv = il.identity(n)
        Minv[i - 1, i - 1], Minv[i - 1, i], Minv[i, i - 1], Minv[i, i] = 0, 1, -1, 2
        out[i] = M
        out[-i] = Minv
    return tuple(out)


def integral_generator(a: int, n: int) -> np.ndarray:
    return _int_generators(n)[a].copy()


def integral_burau(w: BraidWord) -> np.ndarray:
    """rho(w): the Burau matrix at t = -1, exact (object dtype)."""
    gens = _int_generators(w.strands)
    M = il.identity(w.strands)
    for a in w.letters:
        M = M.dot(gens[a])
    return M


@lru_cache(maxsize=None)
def _mod_generators(n: int, m: int) -> tuple[np.ndarray, ...]:
    return tuple(None if g is None else il.mod(g, m) for g in _int_generators(n))


def integral_burau_mod(w: BraidWord, m: int) -> np.ndarray:
    """rho(w) mod m as an int64 array; reduction is a ring map so this is exact."""
    gens = _mod_generators(w.strands, m)
    M = np.eye(w.strands, dtype=np.int64)
    for a in w.letters:
        M = (M @ gens[a]) % m
    return M


def standard_form(dim: int) -> np.ndarray:
    """Gram matrix of the basis (x_1, y_1, ..., x_g, y_g) with i(x_k, y_k) = 1."""
    J = il.int_matrix(np.zeros((dim, dim), dtype=int))
    for k in range(0, dim, 2):
        J[k, k + 1] = 1
        J[k + 1, k] = -1
    return J


@dataclass(frozen=True, eq=False)
class SympContext:
    """Change of basis from Burau coordinates into a standard symplectic basis.

    Columns of ``basis`` are the new basis vectors written in Burau
    coordinates. For odd n the last column spans the radical (the trivial
    summand) and only the leading ``dim`` block is symplectic. For even n
    the last column is y_{g+1} = (1, ..., 1).
    """

    n: int
    g: int
    dim: int
    J: np.ndarray
    basis: np.ndarray
    basis_inv: np.ndarray
    burau_form: np.ndarray
    invariant_functional: tuple[int, ...]
    radical: tuple[int, ...] | None
    y_last: np.ndarray | None

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    def conjugate(self, M: np.ndarray) -> np.ndarray:
        return il.matmul(self.basis_inv, M, self.basis)[: self.dim, : self.dim]


def _invariant_form(n: int) -> np.ndarray:
    gens = [_int_generators(n)[i] for i in range(1, n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows = []
    for M in gens:
        # (M^T J M - J)[r, c] as a linear form in the upper-triangular entries of J
        for r in range(n):
            for c in range(r + 1, n):
                coeffs = []
                for i, j in pairs:
                    val = M[i, r] * M[j, c] - M[j, r] * M[i, c]
                    if (i, j) == (r, c):
                        val -= 1
                    coeffs.append(int(val))
                rows.append(coeffs)
    null = il.rational_nullspace(rows, len(pairs))
    if len(null) != 1:
        raise SymplectizationError(f"invariant skew forms span dimension {len(null)}, expected 1")
    v = il.primitive_vector(null[0])
    J = il.int_matrix(np.zeros((n, n), dtype=int))
    for (i, j), x in zip(pairs, v):
        J[i, j] = x
        J[j, i] = -x
    return J


def _invariant_functional(n: int) -> list[int]:
    gens = [_int_generators(n)[i] for i in range(1, n)]
    rows = []
    for M in gens:
        rows.extend((M.T - il.identity(n)).tolist())
    null = il.rational_nullspace(rows, n)
    if len(null) != 1:
        raise SymplectizationError(f"invariant functionals span dimension {len(null)}")
    return il.primitive_vector(null[0])


def _symplectic_reduce(G: np.ndarray, pin: int | None = None) -> np.ndarray:
    """Unimodular U with U^T G U = standard form, G skew and unimodular.

    If ``pin`` is given that basis vector is kept unchanged and becomes the
    last y.
    """
    k = G.shape[0]
    U = il.identity(k)

    def omega(a, b):
        return int(il.matmul(U[:, a].reshape(1, -1), G, U[:, b].reshape(-1, 1))[0, 0])

    active = list(range(k))
    pairs = []
    pinned_pair = None
    order = ([pin] if pin is not None else [])
    while active:
        p = order.pop() if order else active[0]
        others = [q for q in active if q != p]
        if not others:
            raise SymplectizationError("odd-dimensional remainder in symplectic reduction")
        while True:
            vals = {q: omega(p, q) for q in others}
            nz = [q for q in others if vals[q]]
            if not nz:
                raise SymplectizationError("form is degenerate on the lattice")
            q0 = min(nz, key=lambda q: abs(vals[q]))
            if len(nz) == 1:
                break
            for q in nz:
                if q != q0:
                    U[:, q] = U[:, q] - (vals[q] // vals[q0]) * U[:, q0]
        if abs(vals[q0]) != 1:
            raise SymplectizationError(f"form is not unimodular (pivot {vals[q0]})")
        if p == pin:
            x, y = q0, p
            if omega(x, y) == -1:
                U[:, x] = -U[:, x]
        else:
            x, y = p, q0
            if omega(x, y) == -1:
                U[:, y] = -U[:, y]
        for r in active:
            if r in (x, y):
                continue
            a, b = omega(y, r), -omega(x, r)
            U[:, r] = U[:, r] + a * U[:, x] + b * U[:, y]
        if p == pin:
            pinned_pair = (x, y)
        else:
            pairs.append((x, y))
        active = [r for r in active if r not in (x, y)]
    if pinned_pair is not None:
        pairs.append(pinned_pair)
    cols = [c for xy in pairs for c in xy]
    return U[:, cols]


def _scramble(k: int, seed: int) -> np.ndarray:
    """A random unimodular k x k matrix (product of elementary operations)."""
    rng = random.Random(seed)
    W = il.identity(k)
    for _ in range(3 * k):
        i, j = rng.sample(range(k), 2)
        W[:, i] = W[:, i] + rng.choice((-2, -1, 1, 2)) * W[:, j]
    return W


def symplectize(n: int, variant: int = 0) -> SympContext:
    """Compute a basis of Z^n in which rho(B_n) preserves the standard symplectic form.

    ``variant`` != 0 scrambles the starting lattice basis, yielding a
    different but equally valid symplectic basis.
    """
    return _symplectize(n, variant)


@lru_cache(maxsize=None)
def _symplectize(n: int, variant: int) -> SympContext:
    if n < 3:
        raise ValueError("symplectic coordinates need n >= 3")
    Jb = _invariant_form(n)
    f = _invariant_functional(n)
    ones = il.int_matrix([[1]] * n)
    if n % 2 == 1:
        g = (n - 1) // 2
        dim = 2 * g
        rad = il.integer_kernel(Jb)
        if rad.shape[1] != 1:
            raise SymplectizationError(f"radical has rank {rad.shape[1]}, expected 1")
        r = rad[:, 0]
        if sum(fi * int(ri) for fi, ri in zip(f, r)) not in (1, -1):
            raise SymplectizationError("invariant functional does not split off the radical")
        K = il.integer_kernel(il.int_matrix([f]))
        if variant:
            K = K.dot(_scramble(K.shape[1], variant))
        U = _symplectic_reduce(il.matmul(K.T, Jb, K))
        basis = np.hstack([K.dot(U), r.reshape(-1, 1)])
        y_last = None
        radical = tuple(int(x) for x in r)
    else:
        g = (n - 2) // 2
        dim = n
        if il.det(Jb) != 1:
            raise SymplectizationError("invariant form is not unimodular")
        # start from e_1 .. e_{n-1}, (1, ..., 1) and keep the last vector fixed
        start = il.identity(n)
        start[:, n - 1] = ones[:, 0]
        if variant:
            W = _scramble(n - 1, variant)
            start[:, : n - 1] = start[:, : n - 1].dot(W)
        U = _symplectic_reduce(il.matmul(start.T, Jb, start), pin=n - 1)
        basis = start.dot(U)
        y_last = il.identity(n)[:, n - 1]
        radical = None
    if il.det(basis) not in (1, -1):
        raise SymplectizationError("change of basis is not unimodular")
    basis_inv = il.unimodular_inverse(basis)
    J = standard_form(dim)
    gram = il.matmul(basis.T, Jb, basis)[:dim, :dim]
    if not np.array_equal(gram, J):
        raise SymplectizationError("symplectic reduction did not reach the standard form")
    return SympContext(
        n=n, g=g, dim=dim, J=J, basis=basis, basis_inv=basis_inv, burau_form=Jb,
        invariant_functional=tuple(f), radical=radical, y_last=y_last,
    )


def rho_symplectic(w: BraidWord, ctx: SympContext) -> np.ndarray:
    if w.strands != ctx.n:
        raise ValueError(f"context is for {ctx.n} strands, word has {w.strands}")
    return ctx.conjugate(integral_burau(w))


@lru_cache(maxsize=None)
def _symp_mod_generators(n: int, m: int, variant: int) -> tuple[np.ndarray, ...]:
    ctx = symplectize(n, variant)
    return tuple(None if g is None else il.mod(ctx.conjugate(g), m) for g in _int_generators(n))


def rho_symplectic_mod(w: BraidWord, m: int, variant: int = 0) -> np.ndarray:
    gens = _symp_mod_generators(w.strands, m, variant)
    dim = gens[1].shape[0]
    M = np.eye(dim, dtype=np.int64)
    for a in w.letters:
        M = (M @ gens[a]) % m
    return M
