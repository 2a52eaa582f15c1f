"""Exact integer linear algebra on small matrices (object arrays of Python ints)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

import numpy as np
import sympy


def int_matrix(rows) -> np.ndarray:
    """Object-dtype array of Python ints; never overflows."""
    arr = np.array(rows, dtype=object)
    return np.vectorize(int, otypes=[object])(arr) if arr.size else arr


def identity(n: int) -> np.ndarray:
    return int_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def primitive_vector(vec: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector (first nonzero entry positive)."""
    fr = [Fraction(sympy.Rational(v).p, sympy.Rational(v).q) for v in vec]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * den) for f in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive scaling")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints


def rational_nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[list]:
    A = sympy.Matrix(rows) if rows else sympy.zeros(0, ncols)
    return [list(v) for v in A.nullspace()]


def column_hermite(A: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Unimodular column reduction: returns (H, U, rank) with A @ U = H in column echelon form.

    The last ``ncols - rank`` columns of U form a basis of the integer kernel of A.
    """
    H = [[int(x) for x in row] for row in np.asarray(A, dtype=object)]
    r = len(H)
    k = len(H[0]) if r else 0
    U = [[1 if i == j else 0 for j in range(k)] for i in range(k)]

    def addcol(dst, src, c):
        for row in H:
            row[dst] += c * row[src]
        for row in U:
            row[dst] += c * row[src]

    def swapcol(a, b):
        for row in H:
            row[a], row[b] = row[b], row[a]
        for row in U:
            row[a], row[b] = row[b], row[a]

    pivot = 0
    for i in range(r):
        if pivot >= k:
            break
        while True:
            nz = [c for c in range(pivot, k) if H[i][c] != 0]
            if not nz:
                break
            c0 = min(nz, key=lambda c: abs(H[i][c]))
            if c0 != pivot:
                swapcol(c0, pivot)
            done = True
            for c in range(pivot + 1, k):
                if H[i][c]:
                    addcol(c, pivot, -(H[i][c] // H[i][pivot]))
                    if H[i][c]:
                        done = False
            if done:
                break
        if any(H[i][c] for c in range(pivot, k)):
            pivot += 1
    return int_matrix(H), int_matrix(U), pivot


def integer_kernel(A: np.ndarray) -> np.ndarray:
    """Columns form a Z-basis of {v in Z^k : A v = 0}."""
    _, U, rank = column_hermite(A)
    return U[:, rank:]


def det(M: np.ndarray) -> int:
    return int(sympy.Matrix(np.asarray(M, dtype=object).tolist()).det())


def unimodular_inverse(M: np.ndarray) -> np.ndarray:
    S = sympy.Matrix(np.asarray(M, dtype=object).tolist())
    d = S.det()
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    return int_matrix(S.adjugate() * d)


def matmul(*mats: np.ndarray) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        out = out.dot(m)
    return out


def mod(M: np.ndarray, m: int) -> np.ndarray:
    return (np.asarray(M, dtype=object) % m).astype(np.int64)
