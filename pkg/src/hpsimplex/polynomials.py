"""Exact univariate polynomial arithmetic over the rationals.

Everything here is decision-path exact: coefficients are `fractions.Fraction`,
real roots are located with Sturm chains and rational bisection, and floating
point is never consulted.  Decimal strings appear only in the rendering
helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class NoRealRootError(ValueError):
    """Raised when root isolation is requested for a polynomial without real roots."""


def _coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"polynomial coefficients must be int or Fraction, got {type(value).__name__}")


class Poly:
    """Polynomial with exact rational coefficients, stored ascending by degree.

    Instances are immutable; the zero polynomial has an empty coefficient
    tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dn = len(div) - 1
        lead = div[-1]
        quo = [Fraction(0)] * max(len(rem) - dn, 0)
        for i in range(len(rem) - 1, dn - 1, -1):
            if rem[i] == 0:
                continue
            f = rem[i] / lead
            quo[i - dn] = f
            for j in range(dn + 1):
                rem[i - dn + j] -= f * div[j]
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    # -- calculus / normal forms ------------------------------------------

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        x = _coeff(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero or self.leading == 1:
            return self
        return self * (1 / self.leading)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (Euclid)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def lcm(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly()
        return ((self * other) // self.gcd(other)).monic()

    def squarefree_part(self) -> "Poly":
        g = self.gcd(self.derivative())
        if g.degree < 1:
            return self
        return self // g

    def divides(self, other: "Poly") -> bool:
        """True when self divides other exactly."""
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def int_coeffs(self) -> tuple:
        """Ascending integer coefficients; raises if any coefficient is fractional."""
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
        return tuple(c.numerator for c in self.coeffs)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


X = Poly((0, 1))


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Exact product of two polynomials."""
    return p * q


def product(polys) -> Poly:
    acc = Poly((1,))
    for p in polys:
        acc = acc * p
    return acc


# -- Sturm chains and root isolation ---------------------------------------


def sturm_chain(p: Poly) -> list:
    """Sturm chain p, p', -rem(...), ... of a (preferably square-free) polynomial."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero:
        chain.pop()
    return chain


def sign_variations(values) -> int:
    """Sign changes in a sequence, zeros skipped."""
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of the chain's polynomial in the half-open (lo, hi]."""
    if lo >= hi:
        return 0
    vlo = sign_variations([q(lo) for q in chain])
    vhi = sign_variations([q(hi) for q in chain])
    return vlo - vhi


def cauchy_root_bound(p: Poly) -> Fraction:
    """B with every real root of p strictly inside (-B, B)."""
    if p.degree < 1:
        raise ValueError("bound needs a nonconstant polynomial")
    lead = abs(p.leading)
    return 1 + max(abs(c) / lead for c in p.coeffs[:-1])


@dataclass(frozen=True)
class RootInterval:
    """Open interval (low, high) bracketing exactly one real root, with a sign change."""

    low: Fraction
    high: Fraction

    def __post_init__(self):
        if not self.low < self.high:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    @property
    def midpoint(self) -> Fraction:
        return (self.low + self.high) / 2

    def __contains__(self, x) -> bool:
        return self.low < x < self.high

    def decimal(self, digits: int = 6) -> str:
        return fraction_to_decimal(self.midpoint, digits)


def fraction_to_decimal(x: Fraction, digits: int) -> str:
    """Fixed-point decimal string of x, truncated toward zero. Exact integer math."""
    sign = "-" if x < 0 else ""
    n, d = abs(x.numerator), x.denominator
    whole, rem = divmod(n, d)
    if digits <= 0:
        return f"{sign}{whole}"
    frac = rem * 10**digits // d
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


def _widen_around_rational_root(q: Poly, chain, root: Fraction, precision: Fraction) -> RootInterval:
    # The dominant root came out exactly rational; narrow a symmetric window
    # until it holds that single root and shows a sign change.
    delta = precision / 2
    while count_roots(chain, root - delta, root + delta) != 1 or q(root - delta) == 0:
        delta /= 2
    return RootInterval(root - delta, root + delta)


def isolate_dominant_root(p: Poly, precision) -> RootInterval:
    """Bracket the largest real root of p within the requested interval width.

    Sturm counts drive a rational bisection; the returned interval holds
    exactly one root of the square-free part of p and the polynomial changes
    sign across it.
    """
    precision = _coeff(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if p.degree < 1:
        raise NoRealRootError("constant polynomial has no roots")
    q = p.squarefree_part().monic()
    chain = sturm_chain(q)
    bound = cauchy_root_bound(q)
    lo, hi = -bound, bound
    if count_roots(chain, lo, hi) == 0:
        raise NoRealRootError(f"{p} has no real root")
    while True:
        if count_roots(chain, lo, hi) == 1 and hi - lo <= precision and q(lo) != 0:
            assert q(lo) * q(hi) < 0
            return RootInterval(lo, hi)
        mid = (lo + hi) / 2
        if q(mid) == 0:
            if count_roots(chain, mid, hi) == 0:
                return _widen_around_rational_root(q, chain, mid, precision)
            # Larger roots remain on the right; step lo just past this root.
            step = (hi - mid) / 2
            while count_roots(chain, mid, mid + step) != 0:
                step /= 2
            lo = mid + step
        elif count_roots(chain, mid, hi) > 0:
            lo = mid
        else:
            hi = mid
