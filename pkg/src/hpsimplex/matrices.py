"""Exact rational matrices with characteristic and minimal polynomials."""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Poly


class DimensionError(ValueError):
    """Shape mismatch: operation needs a square matrix or compatible sizes."""


def _entry(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"matrix entries must be int or Fraction, got {type(value).__name__}")


class Matrix:
    """Immutable matrix over the rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows_of_entries):
        entries = tuple(tuple(_entry(e) for e in row) for row in rows_of_entries)
        if not entries or not entries[0]:
            raise ValueError("matrix needs at least one row and column")
        width = len(entries[0])
        if any(len(r) != width for r in entries):
            raise DimensionError("ragged rows")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if isinstance(other, Matrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __getitem__(self, rc):
        i, j = rc
        return self.entries[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("size mismatch in addition")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Matrix([[e * other for e in row] for row in self.entries])
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError("size mismatch in product")
        cols = list(zip(*other.entries))
        return Matrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                       for row in self.entries])

    __rmul__ = __mul__

    def apply(self, vector) -> tuple:
        """Matrix-vector product, returning a tuple of Fractions."""
        vec = [_entry(v) for v in vector]
        if len(vec) != self.cols:
            raise DimensionError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    @property
    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        return sum(self.entries[i][i] for i in range(self.rows))

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        return Matrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"


def char_poly(m: Matrix) -> Poly:
    """Monic characteristic polynomial det(xI - m) by Faddeev-LeVerrier."""
    if not m.is_square:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    n = m.rows
    descending = [Fraction(1)]
    aux = Matrix.identity(n)
    for k in range(1, n + 1):
        am = m * aux
        ck = -am.trace / k
        descending.append(ck)
        aux = am + Matrix.identity(n) * ck
    return Poly(list(reversed(descending)))


def _annihilator_of_vector(m: Matrix, start) -> Poly:
    """Least-degree monic p with p(m) applied to `start` equal to zero (Krylov)."""
    n = m.rows
    basis = []  # (pivot index, reduced vector, producing polynomial)
    w = tuple(_entry(v) for v in start)
    k = 0
    while True:
        r = list(w)
        rp = Poly([0] * k + [1])  # x^k
        for pivot, bv, bp in basis:
            if r[pivot]:
                t = r[pivot] / bv[pivot]
                r = [ri - t * bi for ri, bi in zip(r, bv)]
                rp = rp - t * bp
        pivot = next((i for i, ri in enumerate(r) if ri), None)
        if pivot is None:
            return rp
        basis.append((pivot, r, rp))
        w = m.apply(w)
        k += 1
        if k > n:  # cannot happen: n+1 Krylov vectors are dependent
            raise AssertionError("Krylov iteration failed to terminate")


def min_poly(m: Matrix) -> Poly:
    """Monic minimal polynomial as the lcm of basis-vector annihilators."""
    if not m.is_square:
        raise DimensionError("minimal polynomial of a non-square matrix")
    n = m.rows
    result = Poly((1,))
    for i in range(n):
        if result.degree == n:
            break
        e = [1 if j == i else 0 for j in range(n)]
        result = result.lcm(_annihilator_of_vector(m, e))
    return result.monic()
