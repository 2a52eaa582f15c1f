"""Integer Laurent polynomials in t and square matrices over them."""

from __future__ import annotations

from typing import Sequence


class LaurentPoly:
    """sum_k coeffs[k] * t^(low + k), stored without leading or trailing zeros."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Sequence[int] = (), low: int = 0):
        coeffs = [int(c) for c in coeffs]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        self.coeffs = tuple(coeffs[start:end])
        self.low = low + start if self.coeffs else 0

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> "LaurentPoly":
        return cls((c,), k)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.low - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.low - lo + k] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if ca:
                for b, cb in enumerate(other.coeffs):
                    out[a + b] += ca * cb
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __call__(self, t: int):
        """Evaluate at an integer (negative powers require t = +-1) or Fraction."""
        if t in (1, -1):
            return sum(c * t ** ((self.low + k) % 2) for k, c in enumerate(self.coeffs))
        return sum(c * t ** (self.low + k) for k, c in enumerate(self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        out = ""
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.low + k
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = str(abs(c)) if (abs(c) != 1 or not mono) else ""
            term = mag + ("*" if mag and mono else "") + mono
            if not out:
                out = ("-" if c < 0 else "") + term
            else:
                out += (" - " if c < 0 else " + ") + term
        return out


T = LaurentPoly.monomial(1, 1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


class LaurentMatrix:
    """Square matrix with LaurentPoly entries (row-major list of lists)."""

    def __init__(self, rows: Sequence[Sequence[LaurentPoly | int]]):
        self.rows = [[e if isinstance(e, LaurentPoly) else LaurentPoly.const(e) for e in r]
                     for r in rows]
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("LaurentMatrix must be square")

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        n = self.n
        if other.n != n:
            raise ValueError("dimension mismatch")
        cols = [[other.rows[k][j] for k in range(n)] for j in range(n)]
        out = []
        for i in range(n):
            row = self.rows[i]
            new_row = []
            for j in range(n):
                acc = ZERO
                for a, b in zip(row, cols[j]):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return LaurentMatrix(out)

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self.rows == other.rows

    def evaluate(self, t: int) -> list[list[int]]:
        return [[e(t) for e in r] for r in self.rows]

    def apply(self, vec: Sequence[LaurentPoly | int]) -> list[LaurentPoly]:
        return [sum((e * v for e, v in zip(r, vec)), ZERO) for r in self.rows]

    def determinant(self) -> LaurentPoly:
        """Cofactor expansion; fine for the small sizes used here."""
        return _det([r[:] for r in self.rows])

    def __repr__(self):
        return "LaurentMatrix(" + repr(self.rows) + ")"


def _det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
