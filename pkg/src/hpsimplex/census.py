"""Level-by-level vertex censuses of the hypercube-mosaic path digraph.

Levels of the simplex-shaped digraph are tetrahedra; every vertex falls into
one of ten classes (the base class ``1`` plus A..K by position and in-degree).
This module iterates the exact per-class recurrences for vertex counts and for
per-class value sums, in both the hyperbolic {4,3,3,5} mosaic and its
Euclidean {4,3,3,4} restriction, and exposes the governing coefficient
matrices.

Counts are kept as plain integers throughout: the fractional coefficients of
the counting system are realised as integer numerators whose divisibility is
checked at every step, so exactness is a runtime-verified invariant rather
than an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .matrices import Matrix

CLASS_ORDER = "abcdefghkv"  # vector order used by the coefficient matrices


class VertexClass(Enum):
    ONE = "1"
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"
    H = "H"
    K = "K"


#: classes with no counterpart in the Euclidean mosaic
EUCLIDEAN_ZERO_CLASSES = (
    VertexClass.B, VertexClass.D, VertexClass.E,
    VertexClass.G, VertexClass.H, VertexClass.K,
)

#: in-degree of each class in the level-to-level digraph
INCOMING_EDGES = {
    VertexClass.ONE: 1,
    VertexClass.A: 2, VertexClass.B: 1,
    VertexClass.C: 3, VertexClass.D: 2, VertexClass.E: 1,
    VertexClass.F: 4, VertexClass.G: 3, VertexClass.H: 2, VertexClass.K: 1,
}

_FIELD_OF_CLASS = {
    VertexClass.A: "a", VertexClass.B: "b", VertexClass.C: "c",
    VertexClass.D: "d", VertexClass.E: "e", VertexClass.F: "f",
    VertexClass.G: "g", VertexClass.H: "h", VertexClass.K: "k",
    VertexClass.ONE: "v",
}


class MosaicMode(Enum):
    HYPERBOLIC = "hyperbolic"  # {4,3,3,5}
    EUCLIDEAN = "euclidean"    # {4,3,3,4}


class InexactDivisionError(ArithmeticError):
    """A halving/thirding/quartering in the counting system failed to divide.

    This signals an implementation bug; the recurrences always divide exactly.
    """


def _exact_div(numerator: int, divisor: int, what: str) -> int:
    q, r = divmod(numerator, divisor)
    if r:
        raise InexactDivisionError(f"{what}: {numerator} not divisible by {divisor}")
    return q


def _validate_class_vector(obj, kind: str):
    if obj.level < 0:
        raise ValueError("level must be nonnegative")
    fields = [obj.a, obj.b, obj.c, obj.d, obj.e, obj.f, obj.g, obj.h, obj.k, obj.v]
    if any(x < 0 for x in fields):
        raise ValueError(f"negative {kind}")
    if obj.level == 0:
        if obj.v != 1 or any(x != 0 for x in fields[:-1]):
            raise ValueError("level 0 is the lone base vertex")
    elif obj.v != 4:
        raise ValueError("levels >= 1 carry exactly four base-class vertices")
    if obj.mode is MosaicMode.EUCLIDEAN:
        for cls in EUCLIDEAN_ZERO_CLASSES:
            if getattr(obj, _FIELD_OF_CLASS[cls]) != 0:
                raise ValueError(f"class {cls.value} must vanish in Euclidean mode")


@dataclass(frozen=True)
class LevelCensus:
    """Counts of the ten vertex classes on one level."""

    mode: MosaicMode
    level: int
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0
    e: int = 0
    f: int = 0
    g: int = 0
    h: int = 0
    k: int = 0
    v: int = 0

    def __post_init__(self):
        _validate_class_vector(self, "count")

    def count(self, cls: VertexClass) -> int:
        return getattr(self, _FIELD_OF_CLASS[cls])

    def as_vector(self) -> tuple:
        """(a, b, c, d, e, f, g, h, k, v), the order used by the matrices."""
        return (self.a, self.b, self.c, self.d, self.e,
                self.f, self.g, self.h, self.k, self.v)

    @property
    def total(self) -> int:
        return sum(self.as_vector())

    def per_edge(self) -> tuple:
        """(a/6, b/6): the six level-tetrahedron edges partition A and B."""
        return (_exact_div(self.a, 6, f"a_{self.level} per edge"),
                _exact_div(self.b, 6, f"b_{self.level} per edge"))

    def per_face(self) -> tuple:
        """(c/4, d/4, e/4): the four level-tetrahedron faces partition C, D, E."""
        return (_exact_div(self.c, 4, f"c_{self.level} per face"),
                _exact_div(self.d, 4, f"d_{self.level} per face"),
                _exact_div(self.e, 4, f"e_{self.level} per face"))


@dataclass(frozen=True)
class LevelValueSums:
    """Per-class sums of vertex values (shortest-path counts) on one level."""

    mode: MosaicMode
    level: int
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0
    e: int = 0
    f: int = 0
    g: int = 0
    h: int = 0
    k: int = 0
    v: int = 0

    def __post_init__(self):
        _validate_class_vector(self, "value sum")

    def sum_for(self, cls: VertexClass) -> int:
        return getattr(self, _FIELD_OF_CLASS[cls])

    def as_vector(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.e,
                self.f, self.g, self.h, self.k, self.v)

    @property
    def total(self) -> int:
        return sum(self.as_vector())

    def per_edge(self) -> tuple:
        return (_exact_div(self.a, 6, f"a^_{self.level} per edge"),
                _exact_div(self.b, 6, f"b^_{self.level} per edge"))

    def per_face(self) -> tuple:
        return (_exact_div(self.c, 4, f"c^_{self.level} per face"),
                _exact_div(self.d, 4, f"d^_{self.level} per face"),
                _exact_div(self.e, 4, f"e^_{self.level} per face"))


# -- stepping ---------------------------------------------------------------


def advance_census(c: LevelCensus) -> LevelCensus:
    """One application of the counting recurrences, level n -> n+1 (n >= 1)."""
    if c.level < 1:
        raise ValueError("the recurrences start from level 1; level 0 is the seed")
    n = c.level
    if c.mode is MosaicMode.EUCLIDEAN:
        # Only the 1/A/C/F growth rules exist on {4,3,3,4}; the other class
        # counts are identically zero.
        return LevelCensus(
            mode=c.mode, level=n + 1,
            a=_exact_div(2 * c.a + 3 * c.v, 2, f"a_{n+1}"),
            c=_exact_div(2 * c.a + 3 * c.c, 3, f"c_{n+1}"),
            f=_exact_div(c.c + 4 * c.f, 4, f"f_{n+1}"),
            v=c.v,
        )
    return LevelCensus(
        mode=c.mode, level=n + 1,
        a=_exact_div(2 * c.a + 2 * c.b + 3 * c.v, 2, f"a_{n+1}"),
        b=c.a + 2 * c.b,
        c=_exact_div(2 * c.a + 3 * c.c + 2 * c.d, 3, f"c_{n+1}"),
        d=_exact_div(2 * c.b + 3 * c.c + 4 * c.d + 5 * c.e, 2, f"d_{n+1}"),
        e=3 * c.c + 4 * c.d + 6 * c.e,
        f=_exact_div(c.c + 4 * c.f + 2 * c.g, 4, f"f_{n+1}"),
        g=_exact_div(c.d + 6 * c.f + 6 * c.g + 5 * c.h, 3, f"g_{n+1}"),
        h=_exact_div(c.e + 12 * (c.f + c.g + c.h + c.k), 2, f"h_{n+1}"),
        k=94 * c.f + 97 * c.g + 101 * c.h + 107 * c.k,
        v=c.v,
    )


def advance_value_sums(s: LevelValueSums) -> LevelValueSums:
    """One application of the value-sum recurrences (all-integer coefficients)."""
    if s.level < 1:
        raise ValueError("the recurrences start from level 1; level 0 is the seed")
    n = s.level
    if s.mode is MosaicMode.EUCLIDEAN:
        return LevelValueSums(
            mode=s.mode, level=n + 1,
            a=2 * s.a + 3 * s.v,
            c=2 * s.a + 3 * s.c,
            f=s.c + 4 * s.f,
            v=s.v,
        )
    return LevelValueSums(
        mode=s.mode, level=n + 1,
        a=2 * s.a + 2 * s.b + 3 * s.v,
        b=s.a + 2 * s.b,
        c=2 * s.a + 3 * s.c + 2 * s.d,
        d=2 * s.b + 3 * s.c + 4 * s.d + 5 * s.e,
        e=3 * s.c + 4 * s.d + 6 * s.e,
        f=s.c + 4 * s.f + 2 * s.g,
        g=s.d + 6 * s.f + 6 * s.g + 5 * s.h,
        h=s.e + 12 * (s.f + s.g + s.h + s.k),
        k=94 * s.f + 97 * s.g + 101 * s.h + 107 * s.k,
        v=s.v,
    )


def census_at(mode: MosaicMode, n: int) -> LevelCensus:
    """Census of level n: the seed for n <= 1, iterated recurrences beyond."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    if n == 0:
        return LevelCensus(mode=mode, level=0, v=1)
    c = LevelCensus(mode=mode, level=1, v=4)
    for _ in range(n - 1):
        c = advance_census(c)
    return c


def value_sums_at(mode: MosaicMode, n: int) -> LevelValueSums:
    """Per-class value sums of level n."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    if n == 0:
        return LevelValueSums(mode=mode, level=0, v=1)
    s = LevelValueSums(mode=mode, level=1, v=4)
    for _ in range(n - 1):
        s = advance_value_sums(s)
    return s


def census_levels(mode: MosaicMode, n_max: int) -> list:
    """Censuses of levels 0..n_max in one pass."""
    out = [census_at(mode, 0)]
    if n_max >= 1:
        c = census_at(mode, 1)
        out.append(c)
        for _ in range(n_max - 1):
            c = advance_census(c)
            out.append(c)
    return out


def value_sums_levels(mode: MosaicMode, n_max: int) -> list:
    """Value sums of levels 0..n_max in one pass."""
    out = [value_sums_at(mode, 0)]
    if n_max >= 1:
        s = value_sums_at(mode, 1)
        out.append(s)
        for _ in range(n_max - 1):
            s = advance_value_sums(s)
            out.append(s)
    return out


def total_vertices(c: LevelCensus) -> int:
    """Number of vertices on the level (the base classes included)."""
    return c.total


# -- coefficient matrices -----------------------------------------------------

_H = Fraction(1, 2)
_T = Fraction(1, 3)
_Q = Fraction(1, 4)

#: counting system, rows and columns ordered (a, b, c, d, e, f, g, h, k, v)
_COUNT_ROWS = (
    (1, 1, 0, 0, 0, 0, 0, 0, 0, 3 * _H),
    (1, 2, 0, 0, 0, 0, 0, 0, 0, 0),
    (2 * _T, 0, 1, 2 * _T, 0, 0, 0, 0, 0, 0),
    (0, 1, 3 * _H, 2, 5 * _H, 0, 0, 0, 0, 0),
    (0, 0, 3, 4, 6, 0, 0, 0, 0, 0),
    (0, 0, _Q, 0, 0, 1, _H, 0, 0, 0),
    (0, 0, 0, _T, 0, 2, 2, 5 * _T, 0, 0),
    (0, 0, 0, 0, _H, 6, 6, 6, 6, 0),
    (0, 0, 0, 0, 0, 94, 97, 101, 107, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
)

#: value-sum system (raw child multiplicities; all integers)
_VALUE_ROWS = (
    (2, 2, 0, 0, 0, 0, 0, 0, 0, 3),
    (1, 2, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 0, 3, 2, 0, 0, 0, 0, 0, 0),
    (0, 2, 3, 4, 5, 0, 0, 0, 0, 0),
    (0, 0, 3, 4, 6, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 4, 2, 0, 0, 0),
    (0, 0, 0, 1, 0, 6, 6, 5, 0, 0),
    (0, 0, 0, 0, 1, 12, 12, 12, 12, 0),
    (0, 0, 0, 0, 0, 94, 97, 101, 107, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
)

_KINDS = ("counts", "values")


def coefficient_matrix(kind: str) -> Matrix:
    """10x10 matrix mapping the level-n class vector to level n+1.

    ``counts`` carries the fractional multiplicity-eliminated system,
    ``values`` the all-integer value-sum system.
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}")
    return Matrix(_COUNT_ROWS if kind == "counts" else _VALUE_ROWS)


_BLOCKS = {"abv": (0, 1, 9), "abcdev": (0, 1, 2, 3, 4, 9)}


def reduced_coefficient_matrix(block: str, kind: str) -> Matrix:
    """Closed-subsystem matrix for the ``abv`` (3x3) or ``abcdev`` (6x6) block.

    Sliced from the full system; closure (no coupling into the dropped
    classes) is asserted.
    """
    if block not in _BLOCKS:
        raise ValueError(f"block must be one of {tuple(_BLOCKS)}")
    idx = _BLOCKS[block]
    full = coefficient_matrix(kind)
    outside = [j for j in range(full.cols) if j not in idx]
    for i in idx:
        for j in outside:
            if full[i, j] != 0:
                raise AssertionError(f"block {block} is not closed at ({i},{j})")
    return full.submatrix(idx, idx)


#: Euclidean counterpart: the surviving {a, c, f, v} classes form a closed
#: sub-block of the same system.
EUCLIDEAN_BLOCK_INDICES = (0, 2, 5, 9)


def euclidean_coefficient_matrix(kind: str) -> Matrix:
    """4x4 sub-block on (a, c, f, v) governing the Euclidean restriction."""
    full = coefficient_matrix(kind)
    return full.submatrix(EUCLIDEAN_BLOCK_INDICES, EUCLIDEAN_BLOCK_INDICES)
