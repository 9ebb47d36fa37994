"""Detection and verification of linear homogeneous recurrences with constant coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Poly


class InsufficientDataError(ValueError):
    """The sequence is too short for the requested check."""


def _terms_of(seq) -> tuple:
    if isinstance(seq, Sequence):
        return seq.terms
    return tuple(Fraction(t) for t in seq)


@dataclass(frozen=True)
class Sequence:
    """Contiguously indexed sequence of exact terms."""

    start_index: int
    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise ValueError("sequence must be nonempty")
        object.__setattr__(self, "terms", tuple(Fraction(t) for t in self.terms))

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """Coefficients (c_1..c_order) of x_n = c_1 x_{n-1} + ... + c_order x_{n-order}."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a recurrence needs at least one coefficient")
        if coeffs[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def characteristic_polynomial(self) -> Poly:
        """Monic x^order - c_1 x^{order-1} - ... - c_order."""
        ascending = [-c for c in reversed(self.coefficients)] + [Fraction(1)]
        return Poly(ascending)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coefficients, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = f"x[n-{i}]" if mag == 1 else f"{mag}*x[n-{i}]"
            parts.append(term if not parts and c > 0 else f" {sign} {term}".lstrip())
        return "x[n] = " + " ".join(parts) if parts else "x[n] = 0"


def verify_recurrence(seq, rec: RecurrenceCoeffs) -> bool:
    """True iff every full window of the sequence satisfies the recurrence exactly."""
    terms = _terms_of(seq)
    order = rec.order
    if len(terms) < order + 1:
        raise InsufficientDataError(
            f"need at least {order + 1} terms to check an order-{order} recurrence, got {len(terms)}")
    cs = rec.coefficients
    return all(
        terms[n] == sum(cs[i] * terms[n - 1 - i] for i in range(order))
        for n in range(order, len(terms))
    )


def find_minimal_recurrence(seq) -> RecurrenceCoeffs:
    """Shortest recurrence consistent with all supplied terms (Berlekamp-Massey over Q).

    The result is only certified up to the supplied terms; a sequence of true
    order L needs 2L terms for the detected recurrence to be canonical.
    Sequences whose minimal connection polynomial is divisible by x (a pure
    delay, e.g. 1,5,10,20,40) have no representation with a nonzero trailing
    coefficient and raise ValueError.
    """
    terms = _terms_of(seq)
    if len(terms) < 2:
        raise InsufficientDataError("need at least two terms to fit a recurrence")
    conn = _berlekamp_massey(terms)
    if not conn:  # all-zero input: the identity recurrence fits
        return RecurrenceCoeffs((Fraction(1),))
    return RecurrenceCoeffs(tuple(conn))


def _berlekamp_massey(terms) -> list:
    """Connection coefficients c_1..c_L of the minimal LFSR generating `terms`."""
    c = [Fraction(1)]  # connection polynomial, ascending
    b = [Fraction(1)]  # previous connection polynomial
    length = 0
    gap = 1            # steps since b was current
    prev_disc = Fraction(1)
    for n, term in enumerate(terms):
        disc = term + sum(c[i] * terms[n - i] for i in range(1, length + 1))
        if disc == 0:
            gap += 1
            continue
        scale = disc / prev_disc
        if len(c) < len(b) + gap:
            c = c + [Fraction(0)] * (len(b) + gap - len(c))
        if 2 * length <= n:
            saved = c[:]
            for j, bj in enumerate(b):
                c[j + gap] -= scale * bj
            length = n + 1 - length
            b = saved
            prev_disc = disc
            gap = 1
        else:
            for j, bj in enumerate(b):
                c[j + gap] -= scale * bj
            gap += 1
    return [-x for x in c[1:length + 1]]
