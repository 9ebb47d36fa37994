"""Spectral data of the census systems: polynomials, factorizations, growth roots.

The governing polynomials are kept in factored form; their expansions are the
single source for the recurrence coefficients of the full systems and of the
closed sub-blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .census import coefficient_matrix
from .matrices import char_poly, min_poly
from .polynomials import Poly, RootInterval, isolate_dominant_root, product
from .recurrence import RecurrenceCoeffs

#: irreducible factors of the counting system's minimal polynomial
COUNT_FACTORS = (
    Poly((-1, 1)),                  # x - 1
    Poly((1, -3, 1)),               # x^2 - 3x + 1
    Poly((1, -8, 1)),               # x^2 - 8x + 1
    Poly((1, -116, 366, -116, 1)),  # x^4 - 116x^3 + 366x^2 - 116x + 1
)

#: irreducible factors of the value system's characteristic polynomial
VALUE_FACTORS = (
    Poly((-1, 1)),                     # x - 1
    Poly((2, -4, 1)),                  # x^2 - 4x + 2
    Poly((-6, 28, -13, 1)),            # x^3 - 13x^2 + 28x - 6
    Poly((24, -1428, 1214, -129, 1)),  # x^4 - 129x^3 + 1214x^2 - 1428x + 24
)

#: stated expansions, ascending; frozen independently of the factor lists
COUNT_MIN_POLY_COEFFS = (-1, 128, -1795, 8837, -19239, 19239, -8837, 1795, -128, 1)
VALUE_CHAR_POLY_COEFFS = (288, -19344, 151320, -438532, 608920,
                          -445156, 175292, -36277, 3635, -147, 1)

COUNT_MIN_POLY = Poly(COUNT_MIN_POLY_COEFFS)
VALUE_CHAR_POLY = Poly(VALUE_CHAR_POLY_COEFFS)

#: which factors govern each closed block (ascending block size)
_BLOCK_FACTORS = {
    ("counts", "ab"): (0, 1),
    ("counts", "abcde"): (0, 1, 2),
    ("counts", "full"): (0, 1, 2, 3),
    ("values", "ab"): (0, 1),
    ("values", "abcde"): (0, 1, 2),
    ("values", "full"): (0, 1, 2, 3),
}


def governing_polynomial(kind: str, block: str = "full") -> Poly:
    """Characteristic polynomial of the recurrence shared by the block's sequences."""
    factors = COUNT_FACTORS if kind == "counts" else VALUE_FACTORS
    try:
        picks = _BLOCK_FACTORS[(kind, block)]
    except KeyError:
        raise ValueError(f"unknown kind/block combination {(kind, block)}") from None
    return product(factors[i] for i in picks)


def governing_recurrence(kind: str, block: str = "full") -> RecurrenceCoeffs:
    """Recurrence coefficients read off the governing polynomial."""
    poly = governing_polynomial(kind, block)
    ascending = poly.coeffs
    order = poly.degree
    return RecurrenceCoeffs(tuple(-ascending[order - i] for i in range(1, order + 1)))


@dataclass(frozen=True)
class SpectralSummary:
    """Exact spectral report for one coefficient matrix."""

    kind: str
    minimal: Poly
    characteristic: Poly
    factors: tuple
    factor_product_matches: bool
    extra_characteristic_factor: Optional[Poly]
    dominant_root: RootInterval


def analyze(kind: str, precision=Fraction(1, 10**6)) -> SpectralSummary:
    """Compute minimal/characteristic polynomials of the kind's matrix and
    bracket the dominant growth root."""
    m = coefficient_matrix(kind)
    mp = min_poly(m)
    cp = char_poly(m)
    factors = COUNT_FACTORS if kind == "counts" else VALUE_FACTORS
    expanded = product(factors)
    if kind == "counts":
        matches = expanded == mp
    else:
        matches = expanded == cp and mp == cp
    extra = None
    if cp != mp:
        quotient, remainder = divmod(cp, mp)
        if not remainder.is_zero:
            raise AssertionError("minimal polynomial does not divide the characteristic one")
        extra = quotient
    root = isolate_dominant_root(mp, precision)
    return SpectralSummary(
        kind=kind,
        minimal=mp,
        characteristic=cp,
        factors=factors,
        factor_product_matches=matches,
        extra_characteristic_factor=extra,
        dominant_root=root,
    )
